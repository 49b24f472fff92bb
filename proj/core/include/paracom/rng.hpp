#pragma once

#include <cstdint>

namespace paracom {

// splitmix64 step; expands arbitrary seeds into well-mixed generator state.
constexpr std::uint64_t splitmix64_next(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// xorshift64* stream generator.
///
/// Used everywhere the simulation needs randomness (channel faults, PPG
/// noise, randomized tests). Chosen over <random> engines because the byte
/// stream is part of the protocol contract: identical seeds must produce
/// identical simulations on every platform and in every implementation of
/// this protocol. The algorithm is documented in docs/protocol.md.
class Xorshift64Star {
 public:
  explicit constexpr Xorshift64Star(std::uint64_t seed) : state_(0) {
    // splitmix64 guarantees a nonzero state for every seed, including 0.
    std::uint64_t s = seed;
    do {
      state_ = splitmix64_next(s);
    } while (state_ == 0);
  }

  constexpr std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform double in [0, 1) with 53 significant bits.
  constexpr double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). bound must be > 0.
  constexpr std::uint64_t next_below(std::uint64_t bound) {
    return next() % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace paracom
