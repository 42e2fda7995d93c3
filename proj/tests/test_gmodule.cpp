#include "doctest.h"

#include "modrep/errors.hpp"
#include "modrep/gmodule.hpp"
#include "modrep/rng.hpp"

using namespace modrep;

namespace {

GModule sgn_s3(uint32_t p) {
    auto s3 = Group::named("S3");
    // generators: transposition, 3-cycle
    return GModule::from_generator_matrices(
        s3, p, {FpMatrix::from_rows(p, {{p - 1}}), FpMatrix::from_rows(p, {{1}})});
}

ShortExactSeq regular_c2_ses(uint32_t p) {
    // 0 -> k -> kC2 -> k -> 0 with the fixed-line inclusion
    auto c2 = Group::named("C2");
    auto reg = regular_representation(c2, p);
    auto k = GModule::trivial(c2, p);
    FpMatrix incl = FpMatrix::from_rows(p, {{1}, {1}});
    FpMatrix proj = FpMatrix::from_rows(p, {{1, 0}});
    ShortExactSeq e{k, reg, k, ModuleHom{k, reg, incl}, ModuleHom{reg, k, proj}};
    e.validate();
    return e;
}

}  // namespace

TEST_CASE("hom_space") {
    auto s3 = Group::named("S3");
    auto k3 = GModule::trivial(s3, 3);
    CHECK(hom_dim(k3, k3) == 1);

    auto c2 = Group::named("C2");
    auto reg = regular_representation(c2, 2);
    auto k2 = GModule::trivial(c2, 2);
    CHECK(hom_dim(reg, k2) == 1);  // Hom(kG, N) = N

    CHECK(hom_dim(k3, sgn_s3(3)) == 0);

    CHECK_THROWS(hom_space(k2, k3));
}

TEST_CASE("dual module") {
    auto c2 = Group::named("C2");
    auto k = GModule::trivial(c2, 2);
    CHECK(dual_module(k).same_module(k));

    auto reg = regular_representation(c2, 2);
    CHECK(dual_module(reg).same_module(reg));  // permutation matrices

    auto m = GModule::from_generator_matrices(c2, 2, {FpMatrix::from_rows(2, {{1, 1}, {0, 1}})});
    auto md = dual_module(m);
    CHECK(md.generator_action(0) == FpMatrix::from_rows(2, {{1, 0}, {1, 1}}));
    // double dual is entrywise the original
    auto mdd = dual_module(md);
    for (size_t e = 0; e < c2->order(); ++e) CHECK(mdd.action(e) == m.action(e));
}

TEST_CASE("spin") {
    auto c2 = Group::named("C2");
    auto reg = regular_representation(c2, 2);

    auto z = spin(reg, FpMatrix(2, 2, 1));  // zero seed
    CHECK(z.sub.dim() == 0);

    auto full = spin(reg, FpMatrix::identity(2, 2));
    CHECK(full.sub.dim() == 2);
    CHECK(full.inclusion.matrix.is_identity());

    auto diag = spin(reg, FpMatrix::from_rows(2, {{1}, {1}}));
    CHECK(diag.sub.dim() == 1);
    CHECK(diag.sub.is_trivial_module());
}

TEST_CASE("quotient") {
    auto c2 = Group::named("C2");
    auto reg = regular_representation(c2, 2);

    auto whole = quotient(reg, FpMatrix(2, 0, 2));
    CHECK(whole.quot.dim() == 2);

    auto zero = quotient(reg, FpMatrix::identity(2, 2));
    CHECK(zero.quot.dim() == 0);

    auto q = quotient(reg, FpMatrix::from_rows(2, {{1, 1}}));
    CHECK(q.quot.dim() == 1);
    CHECK(q.quot.is_trivial_module());
    CHECK((q.projection.matrix * q.section).is_identity());

    // not G-stable: span{(1,0)} is moved by the swap
    CHECK_THROWS_AS(quotient(reg, FpMatrix::from_rows(2, {{1, 0}})), InvariantViolation);
}

TEST_CASE("split_test") {
    auto c2 = Group::named("C2");
    auto k = GModule::trivial(c2, 2);
    auto kk = direct_sum_modules(k, k);
    ShortExactSeq split_seq{k, kk.sum, k, kk.incl0, kk.proj1};
    split_seq.validate();
    auto rho = split_test(split_seq);
    REQUIRE(rho.has_value());
    CHECK((rho->matrix * split_seq.alpha.matrix).is_identity());

    CHECK(!split_test(regular_c2_ses(2)).has_value());

    // p = 3 does not divide |C2|: the analogous sequence splits
    CHECK(split_test(regular_c2_ses(3)).has_value());
}

TEST_CASE("iso_test_simple") {
    auto s3 = Group::named("S3");
    auto k = GModule::trivial(s3, 3);
    auto sgn = sgn_s3(3);
    CHECK(iso_test_simple(k, k));
    CHECK(!iso_test_simple(k, sgn));
    CHECK(iso_test_simple(sgn, sgn));
}

TEST_CASE("hom duality and spin/quotient bookkeeping on random submodules") {
    Rng rng(2024);
    for (const char* name : {"S3", "C6", "D8"}) {
        auto g = Group::named(name);
        for (uint32_t p : {2u, 3u}) {
            auto reg = regular_representation(g, p);
            for (int it = 0; it < 5; ++it) {
                FpMatrix seeds(p, reg.dim(), 2);
                for (size_t i = 0; i < seeds.rows(); ++i)
                    for (size_t j = 0; j < seeds.cols(); ++j) seeds.set(i, j, rng.residue(p));
                auto sm = spin(reg, seeds);
                auto qt = quotient(reg, sm.basis_rows);
                CHECK(sm.sub.dim() + qt.quot.dim() == reg.dim());

                CHECK(hom_dim(sm.sub, qt.quot) ==
                      hom_dim(dual_module(qt.quot), dual_module(sm.sub)));
            }
        }
    }
}

TEST_CASE("module construction validation") {
    auto c2 = Group::named("C2");
    // swap matrix squared is the identity: fine
    CHECK_NOTHROW(
        GModule::from_generator_matrices(c2, 3, {FpMatrix::from_rows(3, {{0, 1}, {1, 0}})}));
    // order-3 matrix cannot represent an involution faithfully as C2 action
    CHECK_THROWS_AS(
        GModule::from_generator_matrices(
            c2, 7, {FpMatrix::from_rows(7, {{0, 6}, {1, 6}})}),  // has order 3
        InvariantViolation);
}
