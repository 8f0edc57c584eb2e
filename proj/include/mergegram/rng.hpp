#pragma once

#include <cstdint>
#include <initializer_list>

namespace mergegram {

/// Small splittable generator built on SplitMix64.
///
/// Streams are keyed by a seed and a path of indices (trial, class, sample,
/// ...), so every experiment unit draws from its own reproducible sequence
/// regardless of the order units are evaluated in. The floating-point
/// transforms are written out here rather than taken from <random> so that
/// the produced values do not depend on the standard library vendor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0x6a09e667f3bcc908ULL)) {}

  /// Independent stream for the given index path under `seed`.
  static Rng stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t key = mix(seed + 0x9e3779b97f4a7c15ULL);
    for (std::uint64_t index : path) key = mix(key ^ mix(index + 0xbf58476d1ce4e5b9ULL));
    return Rng(key);
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi], unbiased.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

  /// Standard normal via Box-Muller.
  double normal();

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace mergegram
