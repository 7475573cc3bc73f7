// Copyright 2026 The qwork developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qwork {

/// Seedable PRNG with hand-rolled distributions. std::mt19937_64 is
/// bit-reproducible by the standard, but the standard distributions are
/// not, and the verify reports promise byte-identical output for a fixed
/// seed; so uniform/normal are derived here from raw 64-bit draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 42) : engine_(seed), seed_mix_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// uniform in [0, 1)
  double uniform() { return std::ldexp(static_cast<double>(raw() >> 11), -53); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// standard normal via Box–Muller
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  std::uint64_t integer(std::uint64_t n) { return raw() % n; }

  /// Decorrelated child seed; lets grid points own independent streams
  /// while keeping the sweep deterministic under any thread schedule.
  std::uint64_t child_seed(std::uint64_t index) const {
    std::uint64_t z = seed_mix_ + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  void reseed(std::uint64_t seed) {
    engine_.seed(seed);
    seed_mix_ = seed;
    have_spare_ = false;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_mix_ = 42;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qwork
