#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "sparseq/types.hpp"

namespace sparseq {

// splitmix64; used only to whiten (seed, stream) pairs into mt19937_64 seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seedable generator with derived per-trial streams. Gaussian variates are
// produced by an explicit Box-Muller transform rather than
// std::normal_distribution so that output is identical across standard
// library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 1))) {}

    // uniform in (0, 1]
    double uniform() {
        const std::uint64_t bits = engine_() >> 11;  // 53 bits
        return (static_cast<double>(bits) + 1.0) * 0x1p-53;
    }

    std::uint64_t integer() { return engine_(); }

    // integer uniform in [0, n) via rejection
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    // circularly-symmetric complex Gaussian, E|z|^2 = variance
    Complex complex_gaussian(double variance = 1.0) {
        const double s = std::sqrt(variance / 2.0);
        return Complex(s * gaussian(), s * gaussian());
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace sparseq
