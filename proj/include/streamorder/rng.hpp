#pragma once

// Seeded randomness for the whole toolkit.
//
// Everything algorithm-visible draws from SplitMix64 (public-domain mixing
// constants) rather than <random> engines: std::shuffle and the std
// distributions are implementation-defined, and we promise byte-identical
// results for identical (config, seed) across platforms.

#include <cstdint>
#include <cmath>
#include <vector>

namespace streamorder {

inline uint64_t splitmix64_step(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stateless mix of a seed and two counters; used for regenerable sketch
// columns and for deriving independent sub-seeds.
inline uint64_t mix64(uint64_t seed, uint64_t a, uint64_t b) {
    uint64_t s = seed;
    s ^= 0x9e3779b97f4a7c15ULL + a;
    uint64_t z = splitmix64_step(s);
    s ^= z + b;
    return splitmix64_step(s);
}

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() { return splitmix64_step(state_); }

    // Uniform in [0, bound), bound >= 1. Lemire's multiply-shift rejection.
    uint64_t below(uint64_t bound) {
        __uint128_t m = (__uint128_t)next_u64() * bound;
        auto lo = (uint64_t)m;
        if (lo < bound) {
            uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                m = (__uint128_t)next_u64() * bound;
                lo = (uint64_t)m;
            }
        }
        return (uint64_t)(m >> 64);
    }

    // Uniform double in the open interval (0, 1).
    double unit_open() {
        return ((double)(next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }

    bool coin() { return (next_u64() >> 63) != 0; }

private:
    uint64_t state_;
};

// Fisher-Yates, driven by Rng so the permutation is reproducible.
template <class T>
void shuffle_vec(std::vector<T>& v, Rng& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = rng.below(i);
        std::swap(v[i - 1], v[j]);
    }
}

inline std::vector<uint32_t> random_permutation(uint32_t n, Rng& rng) {
    std::vector<uint32_t> p(n);
    for (uint32_t i = 0; i < n; ++i) p[i] = i;
    shuffle_vec(p, rng);
    return p;
}

// Standard Cauchy variate as a pure function of (seed, row, index): the
// inverse-CDF transform of a counter-based uniform. Regenerating these on
// demand is what lets the sketch evaluate candidate orderings after the pass
// without ever storing its projection matrix.
inline double cauchy_variate(uint64_t seed, uint64_t row, uint64_t index) {
    uint64_t bits = mix64(seed, row, index);
    double u = ((double)(bits >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    return std::tan(3.14159265358979323846 * (u - 0.5));
}

} // namespace streamorder
