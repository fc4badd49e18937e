#pragma once

// Seeded 64-bit xorshift* generator. The bit stream is fixed by this file,
// so a seed names the same sample on every platform and in every port.

#include <cmath>
#include <complex>
#include <cstdint>

#include "hschwarz/series.hpp"

namespace hschwarz {

/// splitmix64 finaliser; used to scramble seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// xorshift64* (shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D).
class Xorshift64Star {
public:
    using result_type = std::uint64_t;

    explicit Xorshift64Star(std::uint64_t seed) noexcept : state_(splitmix64(seed)) {
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (cosine branch only).
    double normal() noexcept {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi * u2);
    }

    /// Standard complex Gaussian, E|z|^2 = 1.
    complex complex_normal() noexcept {
        const double re = normal();
        const double im = normal();
        return complex(re, im) * std::sqrt(0.5);
    }

    complex unit() noexcept { return std::polar(1.0, 2.0 * pi * uniform()); }

private:
    std::uint64_t state_;
};

}  // namespace hschwarz
