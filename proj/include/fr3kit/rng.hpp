// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace fr3 {

/// Deterministic RNG wrapper. Uniforms are derived straight from the engine
/// bits because std::uniform_real_distribution is implementation-defined and
/// would break byte-stable regression outputs.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    /// Decorrelated substream for (seed, stream), e.g. one per link.
    static Rng for_stream(uint64_t seed, uint64_t stream) {
        return Rng(splitmix64(seed ^ splitmix64(stream + 0x9E3779B97F4A7C15ull)));
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], both inclusive.
    int uniform_int(int lo, int hi) {
        const auto span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(eng_() % span);
    }

    static uint64_t splitmix64(uint64_t x) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace fr3
