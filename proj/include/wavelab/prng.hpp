// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <cstdint>

namespace wavelab {

/// Counter-seeded generator: stream i of a sweep yields the same draws no
/// matter how indices are sharded across workers.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  double log_uniform(double lo, double hi) {
    return lo * std::exp(uniform01() * std::log(hi / lo));
  }

 private:
  std::uint64_t state_;
};

/// Generator for the i-th item of a run, independent of evaluation order.
inline SplitMix64 stream_at(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  mix.next();
  return mix;
}

}  // namespace wavelab
