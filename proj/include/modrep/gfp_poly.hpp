#pragma once

#include <cstdint>
#include <vector>

#include "modrep/fp_matrix.hpp"
#include "modrep/rng.hpp"

namespace modrep {

// Polynomials over GF(p): coefficient vector in ascending degree, kept
// normalized (no trailing zeros); the zero polynomial is the empty vector.
using Poly = std::vector<uint32_t>;

namespace gfp {

int deg(const Poly& f);  // -1 for zero
Poly trim(Poly f);
Poly x_power(size_t n);

Poly add(uint32_t p, const Poly& a, const Poly& b);
Poly sub(uint32_t p, const Poly& a, const Poly& b);
Poly mul(uint32_t p, const Poly& a, const Poly& b);
Poly mod(uint32_t p, Poly a, const Poly& m);
Poly monic(uint32_t p, Poly f);
Poly gcd(uint32_t p, Poly a, Poly b);  // monic
Poly derivative(uint32_t p, const Poly& f);
Poly pow_mod(uint32_t p, Poly base, uint64_t e, const Poly& m);

// Distinct monic irreducible factors (multiplicities dropped), sorted by
// (degree, lexicographic coefficients) for determinism.  Uses seeded
// Cantor–Zassenhaus splitting.
std::vector<Poly> distinct_irreducible_factors(uint32_t p, Poly f, Rng& rng);

// Minimal polynomial of a square matrix, via one Krylov elimination over
// the space of matrices.
Poly min_poly(const FpMatrix& theta);

// f(theta), Horner.
FpMatrix eval_at_matrix(uint32_t p, const Poly& f, const FpMatrix& theta);

}  // namespace gfp
}  // namespace modrep
