#pragma once

/**
 * Deterministic random source used by every sampler in the library.
 *
 * Stream semantics (version "fa-rng/1", stable across platforms and builds):
 * - Generator: xoshiro256** seeded with four successive splitmix64 outputs.
 * - next_unit():  53-bit mantissa double in [0, 1), one generator output.
 * - next_below(n): multiply-high bounded integer in [0, n), one output.
 * - next_bit():  top bit of one generator output.
 * - Substreams:  derive_seed(seed, tag, index) = mix(mix(seed ^ fnv1a64(tag)) ^ index)
 *   where mix is the splitmix64 avalanche. Identical (seed, tag, index) always
 *   yields an identical stream, so lazily regenerated structures are
 *   prefix-stable.
 */

#include <array>
#include <cstdint>
#include <string_view>

namespace fordalpha {

inline constexpr std::string_view kRngVersion = "fa-rng/1";

inline constexpr std::uint64_t kSplitmixGamma = 0x9E3779B97F4A7C15ull;

// splitmix64 avalanche applied to a pre-incremented word.
inline std::uint64_t splitmix_mix(std::uint64_t z) {
  z += kSplitmixGamma;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t derive_seed(std::uint64_t root_seed, std::string_view tag,
                                 std::uint64_t index) {
  return splitmix_mix(splitmix_mix(root_seed ^ fnv1a64(tag)) ^ index);
}

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) {
      s += kSplitmixGamma;
      word = splitmix_mix(s - kSplitmixGamma);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t next_u64() {
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

  // Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n); n must be positive.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  bool next_bit() { return (next_u64() >> 63) != 0; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
};

}  // namespace fordalpha
