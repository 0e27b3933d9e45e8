#pragma once

#include <cstdint>
#include <random>

namespace qotp {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic RNG wrapper. All draws go through explicit arithmetic so
// results are identical across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    // Uniform double in [0, 1) with 53 bits of entropy.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p_true) { return uniform01() < p_true; }

    int bit() { return static_cast<int>(gen_() & 1u); }

    // Uniform integer in [0, n).
    std::size_t index(std::size_t n) {
        // rejection sampling keeps the draw unbiased
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return static_cast<std::size_t>(v % n);
    }

    std::uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

// Independent stream for a (seed, index) pair. Used by parallel Monte Carlo
// loops so the result does not depend on thread scheduling.
inline Rng stream_rng(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(seed ^ splitmix64(stream + 0x51ed2701)));
}

}  // namespace qotp
