/**
 *  Copyright (c) 2026 the infomat authors.
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing,
 *  software distributed under the License is distributed on an "AS
 *  IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either
 *  express or implied.  See the License for the specific language
 *  governing permissions and limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstdint>

namespace infomat {

/// SplitMix64 finalizer. Used to derive substream seeds.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256** (Blackman/Vigna), the frozen generator for everything
/// stochastic in this project. Substream k of a user seed s is seeded
/// from SplitMix64 initialized with mix64(s + golden * (k + 1)), which
/// keeps restarts and verification samples independent of each other
/// and of execution order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept { reseed(seed, 0); }

  static Rng substream(std::uint64_t seed, std::uint64_t index) noexcept {
    Rng r(0);
    r.reseed(seed, index);
    return r;
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), 53 random bits.
  double next_double() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in (0, 1]; safe as a log argument.
  double next_open() noexcept {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; the second variate is cached.
  double gaussian() noexcept {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = next_open();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  /// Exponential(1); the Gamma(1) variate used for Dirichlet sampling.
  double exponential() noexcept { return -std::log(next_open()); }

  /// Uniform integer in [lo, hi] inclusive. Modulo reduction; the bias
  /// at 64-bit range is far below anything observable here.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept {
    return lo + next() % (hi - lo + 1);
  }

 private:
  void reseed(std::uint64_t seed, std::uint64_t index) noexcept {
    SplitMix64 sm(mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
    bool all_zero = true;
    for (auto& s : state_) {
      s = sm.next();
      all_zero = all_zero && s == 0;
    }
    if (all_zero) state_[0] = 0x9E3779B97F4A7C15ULL;
    have_cached_ = false;
    cached_ = 0.0;
  }

  static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace infomat
