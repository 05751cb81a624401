// Copyright 2026 The psl authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0
//
// This code is provided *as is* basis, without warranties or conditions of any kind.

#ifndef PSL_RNG_HPP
#define PSL_RNG_HPP

#include <array>
#include <cstdint>

namespace psl {

// splitmix64 step; advances state and returns the next value.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives a substream seed from (seed, index). Substreams for distinct
// indices are independent, so per-clip generation is order-free.
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t s = seed;
  uint64_t a = splitmix64(s);
  s ^= index * 0xff51afd7ed558ccdULL + 0x2545f4914f6cdd1dULL;
  return a ^ splitmix64(s);
}

// xoshiro256** with explicit distribution code. All sampling below is a
// pure function of the generator state, so replays are bit-identical on
// any platform (std:: distributions do not guarantee that).
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t s = seed;
    for (auto& w : s_) w = splitmix64(s);
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi], inclusive. Unbiased via rejection.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    const uint64_t range = uint64_t(hi - lo) + 1;
    if (range == 0) return int64_t(next_u64());  // full 64-bit span
    const uint64_t reject_below = (0 - range) % range;
    for (;;) {
      uint64_t x = next_u64();
      if (x >= reject_below) return lo + int64_t(x % range);
    }
  }

  // Standard normal via Box-Muller; consumes exactly two uniforms.
  double normal();

  // Gamma(shape, 1), shape > 0. Marsaglia-Tsang squeeze.
  double gamma(double shape);

  double beta(double a, double b) {
    double x = gamma(a);
    double y = gamma(b);
    return x / (x + y);
  }

  std::array<uint64_t, 4> state() const { return s_; }
  void set_state(const std::array<uint64_t, 4>& s) { s_ = s; }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::array<uint64_t, 4> s_{};
};

}  // namespace psl

#endif  // PSL_RNG_HPP
