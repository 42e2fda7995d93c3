#pragma once

#include <cstdint>
#include <random>

namespace modrep {

// Deterministic random stream.  All randomized procedures draw from one of
// these so that a run is reproducible from its recorded seed.  Draws use
// plain modulo reduction: the tiny bias is irrelevant here and the output
// does not depend on the standard library's distribution internals.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    uint64_t below(uint64_t n) { return n == 0 ? 0 : eng_() % n; }

    uint32_t residue(uint32_t p) { return static_cast<uint32_t>(below(p)); }

    // Nonzero residue mod p (p >= 2).
    uint32_t unit(uint32_t p) { return 1 + static_cast<uint32_t>(below(p - 1)); }

    bool coin() { return (eng_() & 1) != 0; }

    // Independent child stream; advances this one by one draw.
    Rng fork() { return Rng(eng_()); }

private:
    std::mt19937_64 eng_;
};

}  // namespace modrep
