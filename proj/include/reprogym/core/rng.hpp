#pragma once

#include <cstdint>
#include <random>

namespace reprogym {

/// The framework's single pseudo-random generator.
///
/// The bit stream is std::mt19937_64, which the standard pins exactly; the
/// mappings to reals and indices are done here instead of with the
/// implementation-defined std distributions, so a seed reproduces the same
/// values with any conforming standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [low, high]; returns low when low == high.
  double uniform(double low, double high) {
    return low + (high - low) * uniform01();
  }

  /// Uniform integer in [0, n). n must be >= 1.
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling on the largest multiple of n.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace reprogym
