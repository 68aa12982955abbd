#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace infseed {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound), by rejection. Unlike
/// std::uniform_int_distribution the sequence is the same on every
/// standard library.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace infseed
