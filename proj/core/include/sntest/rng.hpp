// Copyright 2026 The sntest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SNTEST_RNG_HPP
#define SNTEST_RNG_HPP

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>

#include "sntest/errors.hpp"
#include "sntest/numerics.hpp"

namespace sntest {

/// Identifier recorded in reports so every randomized result names the
/// generator that produced it.
inline constexpr const char* kGeneratorId = "xoshiro256++/splitmix64-v1";

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Derives a decorrelated 64-bit seed for stream `stream` of a root seed.
/// Used wherever replications need independent, reproducible substreams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL + stream * 0x9E3779B97F4A7C15ULL);
  return detail::splitmix64(s);
}

/// Deterministic 64-bit generator: xoshiro256++ state-seeded via splitmix64.
/// All variate algorithms are fixed by this library (not delegated to the
/// standard library), so streams are bit-stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = detail::splitmix64(sm);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  /// Generator for substream `stream` of `seed`; see derive_seed.
  static Rng derived(std::uint64_t seed, std::uint64_t stream) {
    return Rng(derive_seed(seed, stream));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = std::rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
  }

  /// Uniform on the open interval (0, 1): values (k + 1/2) * 2^-52, never 0
  /// or 1, so inverse-CDF transforms stay finite.
  double uniform_open() {
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1p-52;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform_open(); }

  /// Standard normal by inversion of uniform_open().
  double normal() { return std_normal_quantile(uniform_open()); }

  double exponential(double rate) {
    if (!(rate > 0.0)) throw ParameterError("exponential: rate must be positive");
    return -std::log(uniform_open()) / rate;
  }

  /// Marsaglia-Tsang for shape >= 1; boosted by U^(1/shape) below 1.
  double gamma(double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0)) {
      throw ParameterError("gamma: shape and rate must be positive");
    }
    if (shape < 1.0) {
      return gamma(shape + 1.0, rate) * std::pow(uniform_open(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      const double x = normal();
      const double t = 1.0 + c * x;
      if (t <= 0.0) continue;
      const double v = t * t * t;
      const double u = uniform_open();
      if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
        return d * v / rate;
      }
    }
  }

 private:
  std::array<std::uint64_t, 4> state_;
};

}  // namespace sntest

#endif  // SNTEST_RNG_HPP
