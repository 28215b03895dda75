#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

#include "cohsim/field.hpp"

namespace cohsim {

// Deterministic generator backing every stochastic operation in this library.
//
// Algorithm: xoshiro256** (Blackman & Vigna), state filled from a single
// 64-bit seed with splitmix64. Uniform doubles take the top 53 bits of each
// output word; normal pairs come from the Box-Muller transform. A fixed seed
// yields the same uniform stream on any platform; each operation consumes
// draws in event order, so results are reproducible call for call.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& s : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            s = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, 2*pi).
    double uniform_angle() { return kTwoPi * uniform(); }

    /// +1 or -1 with equal probability (low bit of the next word).
    int uniform_sign() { return (next_u64() & 1ULL) ? +1 : -1; }

    /// Two independent standard normals (Box-Muller, consumes two uniforms).
    std::pair<double, double> gaussian_pair() {
        const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        return {radius * std::cos(kTwoPi * u2), radius * std::sin(kTwoPi * u2)};
    }

    /// Circular complex Gaussian amplitude with <|z|^2> = 1.
    Complex circular_gaussian() {
        const auto [x, y] = gaussian_pair();
        const double s = 1.0 / std::sqrt(2.0);
        return {s * x, s * y};
    }

  private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace cohsim
