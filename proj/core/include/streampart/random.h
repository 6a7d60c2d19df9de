/*******************************************************************************
 * Portable seeded randomness.
 *
 * Every random draw in the library goes through SplitMix64 and the helpers
 * below instead of <random> distributions, whose output is implementation
 * defined.
 *
 * @file:   random.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace streampart {

/// Finalizer of the SplitMix64 generator.
/// Constants: 0x9e3779b97f4a7c15, 0xbf58476d1ce4e5b9, 0x94d049bb133111eb.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent sub-seed from a master seed and a stream label.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label) {
  return mix64(seed ^ mix64(label));
}

/// Named sub-seed labels so every consumer of the master seed draws from its
/// own stream.
namespace seed_label {
inline constexpr std::uint64_t kStreamOrder = 1;
inline constexpr std::uint64_t kNodeOrder = 2;
inline constexpr std::uint64_t kWalks = 3;
inline constexpr std::uint64_t kCoin = 4;
inline constexpr std::uint64_t kComputeBatch = 5;
inline constexpr std::uint64_t kApplicationBatch = 6;
inline constexpr std::uint64_t kSampler = 7;
inline constexpr std::uint64_t kGenerator = 8;
inline constexpr std::uint64_t kHashSalt = 9;
} // namespace seed_label

/// SplitMix64 as a UniformRandomBitGenerator.
class Rng {
public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0) : _state(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (_state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Rejection sampling removes modulo bias.
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = (*this)();
      if (r >= threshold) {
        return r % bound;
      }
    }
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

private:
  std::uint64_t _state;
};

/// Fisher-Yates shuffle driven by Rng.
template <typename T> void shuffle(std::span<T> items, Rng &rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = rng.below(i);
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

} // namespace streampart
