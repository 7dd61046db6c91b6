#pragma once

#include <cstdint>
#include <random>

#include "varsamp/field.hpp"

namespace varsamp {

/// Deterministic seedable random stream. Same seed, same stream, on every
/// platform (mt19937_64 output is pinned by the standard; all derived draws
/// below avoid implementation-defined distributions).
///
/// Single-owner mutable state: never share one instance across workers.
/// Derive per-worker sources with derive_seed instead.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_word() { return gen_(); }

    /// Uniform integer in [0, bound) via masked rejection; no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw Error("RandomSource::below: bound must be positive");
        if (bound == 1) return 0;
        std::uint64_t mask = ~0ull >> __builtin_clzll(bound - 1);
        for (;;) {
            std::uint64_t r = gen_() & mask;
            if (r < bound) return r;
        }
    }

    /// Exact Bernoulli(num/den) without floating point.
    bool bernoulli(std::uint64_t num, std::uint64_t den) {
        if (den == 0) throw Error("RandomSource::bernoulli: zero denominator");
        return below(den) < num;
    }

    double uniform_real() {
        // 53 random bits in [0,1); used only where a probability is already a double.
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Deterministic per-worker seed derivation (splitmix64 on master ^ index).
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
        std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
};

inline FieldElement rand_element(const Field& f, RandomSource& rng) {
    return f.element(rng.below(f.modulus()));
}

} // namespace varsamp
