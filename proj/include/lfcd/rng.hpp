#pragma once

#include <cstdint>
#include <random>

// Small deterministic RNG helpers. Draws go through these instead of
// std::uniform_int_distribution so that identical seeds give identical
// streams on every standard library implementation.

namespace lfcd {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Decorrelated seed for a numbered substream (k-means restarts etc.).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
}

// Unbiased draw in [0, n); n must be positive.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t max = ~std::uint64_t{0};
  const std::uint64_t limit = max - max % n;
  for (;;) {
    const std::uint64_t r = rng();
    if (r < limit) return r % n;
  }
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace lfcd
