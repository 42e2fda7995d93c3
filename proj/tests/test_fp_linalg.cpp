#include "doctest.h"

#include "modrep/fp_matrix.hpp"
#include "modrep/gfp_poly.hpp"
#include "modrep/rng.hpp"

using namespace modrep;

namespace {
FpMatrix random_matrix(Rng& rng, uint32_t p, size_t r, size_t c) {
    FpMatrix m(p, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.set(i, j, rng.residue(p));
    return m;
}

// 2x2 determinant, the independent oracle for tiny rank checks
uint32_t det2(const FpMatrix& a) {
    uint32_t p = a.prime();
    return static_cast<uint32_t>(
        (uint64_t(a(0, 0)) * a(1, 1) % p + uint64_t(p) * p - uint64_t(a(0, 1)) * a(1, 0) % p) % p);
}
}  // namespace

TEST_CASE("rref basic shapes") {
    auto id = FpMatrix::identity(2, 2);
    auto rr = id.rref();
    CHECK(rr.r == id);
    CHECK(rr.rank == 2);

    FpMatrix z(5, 3, 4);
    auto rz = z.rref();
    CHECK(rz.r == z);
    CHECK(rz.rank == 0);

    auto a = FpMatrix::from_rows(5, {{1, 2}, {2, 4}});
    CHECK(det2(a) == 0);  // second row is 2 * first
    CHECK(a.rank() == 1);
}

TEST_CASE("rref idempotence and transpose rank on random inputs") {
    Rng rng(42);
    for (uint32_t p : {2u, 3u, 5u, 7u, 97u}) {
        for (int it = 0; it < 30; ++it) {
            size_t r = 1 + rng.below(7), c = 1 + rng.below(7);
            FpMatrix a = random_matrix(rng, p, r, c);
            auto rr = a.rref();
            CHECK(rr.r.rref().r == rr.r);
            CHECK(a.rank() == a.transposed().rank());
            CHECK(a.kernel_basis().cols() + a.rank() == a.cols());
        }
    }
}

TEST_CASE("kernel_basis") {
    CHECK(FpMatrix::identity(3, 4).kernel_basis().cols() == 0);

    auto a = FpMatrix::from_rows(2, {{1, 1}, {1, 1}});
    auto k = a.kernel_basis();
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == 1);
    CHECK(k(1, 0) == 1);

    Rng rng(7);
    FpMatrix b = random_matrix(rng, 3, 4, 6);
    auto kb = b.kernel_basis();
    CHECK(kb.cols() == 6 - b.rank());
    CHECK((b * kb).is_zero());
    CHECK(kb.rank() == kb.cols());
}

TEST_CASE("solve_right") {
    Rng rng(11);
    FpMatrix b = random_matrix(rng, 7, 4, 3);
    auto sol = FpMatrix::identity(7, 4).solve_right(b);
    REQUIRE(sol.has_value());
    CHECK(sol->x == b);

    FpMatrix z(2, 2, 2);
    FpMatrix nz = FpMatrix::from_rows(2, {{1}, {0}});
    CHECK(!z.solve_right(nz).has_value());

    auto a = FpMatrix::from_rows(2, {{1, 1}, {0, 1}});
    auto rhs = FpMatrix::from_rows(2, {{0}, {1}});
    auto s = a.solve_right(rhs);
    REQUIRE(s.has_value());
    // unique solution here: enumerating all four GF(2) columns leaves (1,1)
    CHECK(s->x == FpMatrix::from_rows(2, {{1}, {1}}));
    CHECK(s->kernel.cols() == 0);

    CHECK_THROWS(FpMatrix(3, 2, 2).solve_right(FpMatrix(3, 3, 1)));

    // soundness under randomization: A * X = B whenever solvable
    for (int it = 0; it < 40; ++it) {
        uint32_t p = it % 2 ? 3 : 5;
        FpMatrix m = random_matrix(rng, p, 3 + rng.below(3), 2 + rng.below(4));
        FpMatrix x0 = random_matrix(rng, p, m.cols(), 2);
        FpMatrix rhs2 = m * x0;
        auto s2 = m.solve_right(rhs2);
        REQUIRE(s2.has_value());
        CHECK(m * s2->x == rhs2);
        CHECK((m * s2->kernel).is_zero());
    }
}

TEST_CASE("inverse, direct sum, kronecker") {
    CHECK(FpMatrix::identity(5, 3).inverse() == FpMatrix::identity(5, 3));

    auto invol = FpMatrix::from_rows(2, {{1, 1}, {0, 1}});
    CHECK((invol * invol).is_identity());  // involution
    CHECK(invol.inverse() == invol);

    CHECK(!FpMatrix(3, 2, 2).inverse().has_value());  // singular, reported not crashed
    auto sing = FpMatrix::from_rows(5, {{1, 2}, {2, 4}});
    CHECK(!sing.inverse().has_value());

    auto a = FpMatrix::from_rows(7, {{3}});
    auto b = FpMatrix::from_rows(7, {{4}});
    CHECK(FpMatrix::direct_sum(a, b) == FpMatrix::from_rows(7, {{3, 0}, {0, 4}}));

    Rng rng(3);
    FpMatrix x = random_matrix(rng, 3, 2, 3), y = random_matrix(rng, 3, 3, 2);
    FpMatrix u = random_matrix(rng, 3, 3, 2), v = random_matrix(rng, 3, 2, 4);
    // (X (x) U)(Y (x) V) = XY (x) UV
    CHECK(FpMatrix::kronecker(x, u) * FpMatrix::kronecker(y, v) ==
          FpMatrix::kronecker(x * y, u * v));
}

TEST_CASE("row space maintenance") {
    RowSpace rs(3, 4);
    CHECK(rs.insert({1, 2, 0, 1}));
    CHECK(rs.insert({0, 1, 1, 0}));
    CHECK(!rs.insert({1, 0, 1, 1}));  // 1*r1 - 2*r2
    CHECK(rs.dim() == 2);
    CHECK(rs.contains({2, 1, 2, 2}));
    auto b = rs.basis_matrix();
    CHECK(b.rref().r == b);  // canonical
}

TEST_CASE("minimal polynomial and factorization") {
    Rng rng(5);
    // companion-ish example: the GF(2) involution [[1,1],[0,1]] has
    // minimal polynomial (x+1)^2
    auto invol = FpMatrix::from_rows(2, {{1, 1}, {0, 1}});
    CHECK(gfp::min_poly(invol) == Poly{1, 0, 1});

    CHECK(gfp::min_poly(FpMatrix::identity(5, 4)) == Poly{4, 1});  // x - 1

    auto f = gfp::mul(3, Poly{1, 1}, Poly{2, 0, 1});  // (x+1)(x^2+2)
    auto factors = gfp::distinct_irreducible_factors(3, f, rng);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == Poly{1, 1});
    CHECK(factors[1] == Poly{2, 0, 1});

    for (int it = 0; it < 25; ++it) {
        uint32_t p = (it % 3 == 0) ? 2 : (it % 3 == 1 ? 3 : 5);
        size_t d = 2 + rng.below(5);
        FpMatrix m = random_matrix(rng, p, d, d);
        Poly mp = gfp::min_poly(m);
        CHECK(gfp::eval_at_matrix(p, mp, m).is_zero());
        auto fs = gfp::distinct_irreducible_factors(p, mp, rng);
        Poly prod{1};
        for (const auto& fac : fs) {
            CHECK(gfp::eval_at_matrix(p, fac, m).rank() < d);  // each factor kills something
            prod = gfp::mul(p, prod, fac);
        }
        // the radical of the minimal polynomial divides it
        CHECK(gfp::mod(p, mp, prod).empty());
    }
}
