#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace homlab {

/// splitmix64 mix step; used to derive independent substream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic seed for a (role, index) substream of a master seed.
/// Chunked generation draws its chunk seed here, so the result of a chunked
/// run is independent of chunk evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t role, std::uint64_t index = 0) {
    return mix64(mix64(master ^ mix64(role)) ^ index);
}

/// Seeded random stream with explicitly coded variate transforms.
/// std::mt19937_64 output is standard-specified, and the transforms below are
/// written out by hand, so identical seeds give bit-identical sequences on
/// every platform.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1].
    double uniform_pos() { return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    double exponential(double mean) { return -mean * std::log(uniform_pos()); }

    /// Box-Muller, spare value cached.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = uniform_pos();
        double v = uniform();
        double r = std::sqrt(-2.0 * std::log(u));
        spare_ = r * std::sin(6.283185307179586477 * v);
        have_spare_ = true;
        return r * std::cos(6.283185307179586477 * v);
    }

    double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

    std::uint64_t bits() { return eng_(); }

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace homlab
