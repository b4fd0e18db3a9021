#pragma once

#include <cstdint>
#include <functional>

#include "lierf/algebra.hpp"

namespace lierf {

// Deterministic fixture generator. splitmix64 keeps the stream identical
// across platforms and standard libraries, so every seeded check in the
// reports is replayable bit-for-bit.
struct TestRand {
    uint64_t state;

    explicit TestRand(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    size_t index(size_t n) { return n ? next() % n : 0; }

    // uniform in [0,1)
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// Dressed index with a non-empty linear slot (the closure of indices
// reachable from base generators under the commutation relations).
inline XiIndex random_index(TestRand& rng) {
    static const std::vector<Name> pool = {"U", "V", "W", "Z"};
    size_t na = rng.index(3);       // 0..2
    size_t nl = 1 + rng.index(2);   // 1..2
    std::vector<Name> anti, lin;
    for (size_t i = 0; i < na; ++i) anti.push_back(pool[rng.index(pool.size())]);
    for (size_t i = 0; i < nl; ++i) lin.push_back(pool[rng.index(pool.size())]);
    return XiIndex(std::move(anti), std::move(lin));
}

inline OpPoly random_op_poly(TestRand& rng, size_t max_word_len) {
    OpPoly p;
    size_t nterms = 1 + rng.index(3);
    for (size_t t = 0; t < nterms; ++t) {
        Word w;
        size_t len = rng.index(max_word_len + 1);
        for (size_t i = 0; i < len; ++i) {
            XiIndex idx = random_index(rng);
            w.push_back(rng.index(2) ? creator(idx) : annihilator(idx));
        }
        GRat c(Rational((long long)rng.index(5) - 2), Rational((long long)rng.index(3) - 1));
        if (c.is_zero()) c = GRat(1);
        p += OpPoly::word(std::move(w), Coefficient(c));
    }
    return p;
}

}  // namespace lierf
