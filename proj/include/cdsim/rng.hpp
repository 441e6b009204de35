#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace cdsim {

// SplitMix64. Fully specified by its recurrence, so every seeded stream is
// reproducible across compilers and standard libraries (std::normal_distribution
// and friends are not).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 mantissa bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller, two fresh uniforms per call (no cached spare, so draw
  // positions stay independent of call history).
  double gaussian(double mean, double stddev) {
    double u1 = uniform01();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    constexpr double kTwoPi = 6.28318530717958647692;
    return mean + stddev * r * std::cos(kTwoPi * u2);
  }

  // Unbiased-enough index draw (Lemire multiply-shift).
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 1469598103934665603ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

// Seed split scheme: every component stream is derived from
// (master seed, component tag, index). Used everywhere a sub-seed is needed,
// so one master seed determines the whole experiment.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t index = 0) {
  std::uint64_t h = fnv1a64(tag.data(), tag.size(), master ^ 0xA0761D6478BD642Full);
  SplitMix64 mix(h ^ (index + 0x9FB21C651E98DF25ull) * 0xE7037ED1A0B428DBull);
  return mix.next();
}

}  // namespace cdsim
