#include "modrep/gfp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace modrep {
namespace gfp {

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly x_power(size_t n) {
    Poly f(n + 1, 0);
    f[n] = 1;
    return f;
}

Poly add(uint32_t p, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint32_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = s >= p ? s - p : s;
    }
    return trim(std::move(r));
}

Poly sub(uint32_t p, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint32_t s = (i < a.size() ? a[i] : 0) + p - (i < b.size() ? b[i] : 0);
        r[i] = s >= p ? s - p : s;
    }
    return trim(std::move(r));
}

Poly mul(uint32_t p, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + uint64_t(a[i]) * b[j]) % p;
    }
    Poly r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<uint32_t>(acc[i]);
    return trim(std::move(r));
}

Poly mod(uint32_t p, Poly a, const Poly& m) {
    if (m.empty()) throw std::domain_error("poly mod by zero");
    uint32_t leadinv = fp_inv(m.back(), p);
    while (a.size() >= m.size()) {
        uint64_t c = uint64_t(a.back()) * leadinv % p;
        if (c != 0) {
            size_t off = a.size() - m.size();
            for (size_t i = 0; i < m.size(); ++i) {
                uint64_t t = a[off + i] + uint64_t(p) * p - c * m[i] % p;
                a[off + i] = static_cast<uint32_t>(t % p);
            }
        }
        a.pop_back();
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

Poly monic(uint32_t p, Poly f) {
    f = trim(std::move(f));
    if (f.empty() || f.back() == 1) return f;
    uint64_t inv = fp_inv(f.back(), p);
    for (auto& c : f) c = static_cast<uint32_t>(inv * c % p);
    return f;
}

Poly gcd(uint32_t p, Poly a, Poly b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = mod(p, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(p, std::move(a));
}

Poly derivative(uint32_t p, const Poly& f) {
    Poly r;
    for (size_t i = 1; i < f.size(); ++i)
        r.push_back(static_cast<uint32_t>(uint64_t(f[i]) * (i % p) % p));
    return trim(std::move(r));
}

Poly pow_mod(uint32_t p, Poly base, uint64_t e, const Poly& m) {
    Poly r{1};
    base = mod(p, std::move(base), m);
    while (e) {
        if (e & 1) r = mod(p, mul(p, r, base), m);
        base = mod(p, mul(p, base, base), m);
        e >>= 1;
    }
    return r;
}

namespace {

// f with every exponent divided by p; valid exactly when f'(x) = 0, using
// a^(1/p) = a over the prime field.
Poly pth_root(uint32_t p, const Poly& f) {
    Poly r;
    for (size_t i = 0; i < f.size(); i += p) r.push_back(f[i]);
    return trim(std::move(r));
}

Poly exact_div(uint32_t p, const Poly& f, const Poly& g);

// Product of the distinct irreducible factors.  f/gcd(f,f') alone would
// lose factors whose multiplicity is divisible by p, so the gcd part is
// processed recursively as well.
Poly radical_poly(uint32_t p, Poly f) {
    f = monic(p, std::move(f));
    if (deg(f) <= 1) return f;
    Poly d = derivative(p, f);
    if (d.empty()) return radical_poly(p, pth_root(p, f));
    Poly u = gcd(p, f, d);
    if (deg(u) == 0) return f;
    Poly v = exact_div(p, f, u);
    Poly r2 = radical_poly(p, u);
    Poly overlap = gcd(p, r2, v);
    if (deg(overlap) > 0) r2 = exact_div(p, r2, overlap);
    return mul(p, v, r2);
}

Poly exact_div(uint32_t p, const Poly& f, const Poly& g) {
    Poly q(f.size() - g.size() + 1, 0);
    Poly rem = f;
    uint32_t leadinv = fp_inv(g.back(), p);
    while (rem.size() >= g.size() && !rem.empty()) {
        uint64_t c = uint64_t(rem.back()) * leadinv % p;
        size_t off = rem.size() - g.size();
        q[off] = static_cast<uint32_t>(c);
        for (size_t i = 0; i < g.size(); ++i) {
            uint64_t t = rem[off + i] + uint64_t(p) * p - c * g[i] % p;
            rem[off + i] = static_cast<uint32_t>(t % p);
        }
        rem.pop_back();
        rem = trim(std::move(rem));
    }
    return trim(std::move(q));
}

Poly random_poly_below(uint32_t p, size_t degree_bound, Rng& rng) {
    Poly r(degree_bound);
    for (auto& c : r) c = rng.residue(p);
    return trim(std::move(r));
}

// Equal-degree splitting (Cantor–Zassenhaus); g is a product of distinct
// irreducibles, all of degree d.
void edf(uint32_t p, const Poly& g, size_t d, Rng& rng, std::vector<Poly>& out) {
    if (static_cast<size_t>(deg(g)) == d) {
        out.push_back(monic(p, g));
        return;
    }
    for (int attempt = 0; attempt < 200; ++attempt) {
        Poly r = random_poly_below(p, static_cast<size_t>(deg(g)), rng);
        if (deg(r) < 1 && (r.empty() || r[0] == 0)) continue;
        Poly s;
        if (p == 2) {
            // trace map sum r^(2^j), j < d
            s = {};
            Poly t = mod(p, r, g);
            for (size_t j = 0; j < d; ++j) {
                s = add(p, s, t);
                t = mod(p, mul(p, t, t), g);
            }
        } else {
            // prod over j of (r^(p^j))^((p-1)/2), a (p^d-1)/2 power without
            // big-integer exponents
            s = {1};
            Poly t = mod(p, r, g);
            for (size_t j = 0; j < d; ++j) {
                s = mod(p, mul(p, s, pow_mod(p, t, (p - 1) / 2, g)), g);
                t = pow_mod(p, t, p, g);
            }
            s = sub(p, s, Poly{1});
        }
        Poly h = gcd(p, g, s);
        if (deg(h) > 0 && deg(h) < deg(g)) {
            edf(p, h, d, rng, out);
            edf(p, exact_div(p, g, h), d, rng, out);
            return;
        }
    }
    throw std::runtime_error("equal-degree factorization did not converge");
}

}  // namespace

std::vector<Poly> distinct_irreducible_factors(uint32_t p, Poly f, Rng& rng) {
    std::vector<Poly> out;
    f = radical_poly(p, std::move(f));
    if (deg(f) < 1) return out;
    // distinct-degree stage
    Poly g = f;
    Poly h = x_power(1);
    for (size_t d = 1; 2 * d <= static_cast<size_t>(deg(g)); ++d) {
        h = pow_mod(p, h, p, g);  // x^(p^d) mod g
        Poly c = gcd(p, g, sub(p, h, x_power(1)));
        if (deg(c) > 0) {
            edf(p, c, d, rng, out);
            g = exact_div(p, g, c);
            h = mod(p, h, g);
        }
        if (deg(g) == 0) break;
    }
    if (deg(g) > 0) out.push_back(monic(p, g));
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

Poly min_poly(const FpMatrix& theta) {
    if (theta.rows() != theta.cols()) throw std::invalid_argument("min_poly needs square matrix");
    uint32_t p = theta.prime();
    size_t d = theta.rows();
    if (d == 0) return {1};
    // Stack vec(theta^k) as columns, k = 0..d; the first non-pivot column m
    // of the RREF yields the monic minimal polynomial of degree m.
    FpMatrix powers(p, d * d, d + 1);
    FpMatrix cur = FpMatrix::identity(p, d);
    for (size_t k = 0; k <= d; ++k) {
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) powers.set(i * d + j, k, cur(i, j));
        if (k < d) cur = cur * theta;
    }
    auto rr = powers.rref();
    std::vector<bool> is_pivot(d + 2, false);
    for (size_t c : rr.pivots) is_pivot[c] = true;
    size_t m = 0;
    while (m <= d && is_pivot[m]) ++m;
    // theta^m = sum coeffs * theta^k for k < m, read off the RREF column.
    Poly f(m + 1, 0);
    f[m] = 1;
    for (size_t i = 0; i < rr.pivots.size() && rr.pivots[i] < m; ++i) {
        uint32_t v = rr.r(i, m);
        if (v) f[rr.pivots[i]] = p - v;
    }
    return f;
}

FpMatrix eval_at_matrix(uint32_t p, const Poly& f, const FpMatrix& theta) {
    size_t d = theta.rows();
    FpMatrix acc(p, d, d);
    for (size_t i = f.size(); i-- > 0;) {
        acc = acc * theta;
        if (f[i]) acc = acc + FpMatrix::identity(p, d).scaled(f[i]);
    }
    return acc;
}

}  // namespace gfp
}  // namespace modrep
