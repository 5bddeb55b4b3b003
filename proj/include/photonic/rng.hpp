// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace photonic {

// Stateless 64-bit mixer (Steele/Lea/Vigna "splitmix64" finalizer). Used to
// expand a single user seed into generator state and to derive independent
// sub-stream seeds for parallel workers.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Seed of the rng stream owned by worker `worker` of a run seeded with `seed`.
// This derivation is part of the reproducibility contract: worker w of W
// processes trials [w*T/W, (w+1)*T/W) using sub_seed(seed, w).
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t worker) {
  return splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (worker + 1)));
}

// xoshiro256++ (Blackman & Vigna, public-domain reference implementation).
// 256-bit state, splittable via sub_seed above, identical output on every
// platform -- which std::mt19937 + std::*_distribution would not guarantee.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : s_) {
      x = splitmix64(x);
      w = x;
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

inline constexpr const char* kRngName = "xoshiro256++";

}  // namespace photonic
