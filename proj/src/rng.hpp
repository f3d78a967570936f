// Copyright 2026 The tetraprop Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string_view>

namespace tetraprop {

/// Seeded generator with platform-independent draws.
///
/// std::mt19937_64 is bit-specified by the standard; the standard
/// distributions are not, so the conversions to doubles live here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Uniform direction on the unit 2-sphere.
  std::array<double, 3> unit3() {
    for (;;) {
      std::array<double, 3> v{normal(), normal(), normal()};
      const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      if (n > 1e-12) return {v[0] / n, v[1] / n, v[2] / n};
    }
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 finalizer; used to derive child seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL + (value << 6) + (value >> 2);
  z ^= value;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t hash_doubles(std::uint64_t h, std::span<const double> values) {
  for (double v : values) {
    // +0.0 and -0.0 hash alike
    h = mix_seed(h, std::bit_cast<std::uint64_t>(v == 0.0 ? 0.0 : v));
  }
  return h;
}

inline std::uint64_t hash_string(std::uint64_t h, std::string_view s) {
  for (unsigned char c : s) h = mix_seed(h, c);
  return h;
}

}  // namespace tetraprop
