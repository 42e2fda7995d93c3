#include "doctest.h"

#include <sstream>

#include "modrep/errors.hpp"
#include "modrep/gmodule.hpp"
#include "modrep/group.hpp"

using namespace modrep;

TEST_CASE("closure from permutations") {
    auto c3 = Group::from_permutations({{1, 2, 0}});
    CHECK(c3->order() == 3);
    c3->validate();

    auto s3 = Group::from_permutations({{1, 0, 2}, {1, 2, 0}});
    CHECK(s3->order() == 6);
    s3->validate();
    // nonabelian: some pair fails to commute
    bool abelian = true;
    for (size_t a = 0; a < 6 && abelian; ++a)
        for (size_t b = 0; b < 6; ++b)
            if (s3->mul(a, b) != s3->mul(b, a)) {
                abelian = false;
                break;
            }
    CHECK(!abelian);

    auto trivial = Group::from_permutations({});
    CHECK(trivial->order() == 1);
}

TEST_CASE("order cap") {
    CHECK_THROWS_AS(Group::from_permutations({{1, 2, 3, 4, 5, 6, 0}}, 5), GroupTooLargeError);
}

TEST_CASE("named catalog") {
    CHECK(Group::named("C2")->order() == 2);
    CHECK(Group::named("S3")->order() == 6);
    CHECK(Group::named("A4")->order() == 12);
    CHECK(Group::named("S4")->order() == 24);
    CHECK(Group::named("V4")->order() == 4);
    CHECK(Group::named("C2xC2")->order() == 4);
    CHECK(Group::named("D8")->order() == 8);
    CHECK(Group::named("Q8")->order() == 8);
    CHECK(Group::named("C6")->order() == 6);
    CHECK_THROWS_AS(Group::named("E8"), ParseError);

    // D8 has five involutions, Q8 exactly one
    auto count_involutions = [](const GroupPtr& g) {
        size_t c = 0;
        for (size_t e = 1; e < g->order(); ++e)
            if (g->element_order(e) == 2) ++c;
        return c;
    };
    CHECK(count_involutions(Group::named("D8")) == 5);
    CHECK(count_involutions(Group::named("Q8")) == 1);

    for (const auto& name : Group::catalog_names()) Group::named(name)->validate();
}

TEST_CASE("word consistency") {
    auto g = Group::named("S4");
    for (size_t a = 0; a < g->order(); ++a)
        for (size_t b = 0; b < g->order(); ++b) {
            auto w = g->word(a);
            const auto& wb = g->word(b);
            w.insert(w.end(), wb.begin(), wb.end());
            CHECK(g->evaluate_word(w) == g->mul(a, b));
        }
}

TEST_CASE("group file parsing") {
    std::istringstream good("degree 3\ng: 2 1 3\ng: 2 3 1\n");
    CHECK(Group::parse(good)->order() == 6);

    std::istringstream dup("degree 3\ng: 1 1 3\n");
    CHECK_THROWS_WITH_AS(Group::parse(dup), doctest::Contains("line 2"), ParseError);

    std::istringstream short_line("degree 4\ng: 2 1\n");
    CHECK_THROWS_AS(Group::parse(short_line), ParseError);

    std::istringstream no_header("g: 2 1\n");
    CHECK_THROWS_AS(Group::parse(no_header), ParseError);
}

TEST_CASE("regular representation") {
    auto one = Group::from_permutations({});
    auto reg1 = regular_representation(one, 5);
    CHECK(reg1.dim() == 1);
    CHECK(reg1.action(0).is_identity());

    auto c2 = Group::named("C2");
    auto reg = regular_representation(c2, 2);
    CHECK(reg.dim() == 2);
    CHECK(reg.action(1) == FpMatrix::from_rows(2, {{0, 1}, {1, 0}}));

    auto s3 = Group::named("S3");
    auto reg3 = regular_representation(s3, 3);
    reg3.validate(true);  // full pairwise homomorphism check
    for (size_t e = 0; e < s3->order(); ++e) {
        // permutation matrix: each column has exactly one 1
        for (size_t j = 0; j < 6; ++j) {
            size_t ones = 0;
            for (size_t i = 0; i < 6; ++i)
                if (reg3.action(e)(i, j)) ++ones;
            CHECK(ones == 1);
        }
    }
}
