#pragma once

#include <cstdint>
#include <random>

namespace rcbf {

/// splitmix64 step; used to derive independent stream seeds from one seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Deterministic uniform double in [0, 1) from a raw 64-bit draw.
/// Avoids std::uniform_real_distribution, whose output is
/// implementation-defined.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [-half_width, half_width]. Always consumes one draw so
/// the stream layout does not depend on the box shape; a zero half-width
/// yields exactly zero.
inline double uniform_symmetric(std::mt19937_64& rng, double half_width) {
  return half_width * (2.0 * uniform01(rng) - 1.0);
}

}  // namespace rcbf
