#pragma once

#include <cmath>
#include <cstdint>

#include "diffamp/types.hpp"

namespace diffamp {

// splitmix64: one 64-bit word of state, full-period, trivially seedable.
// Used everywhere instead of std::normal_distribution so that sampled
// streams are bit-identical across standard libraries and platforms.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in (0, 1]; never returns 0, so log() is safe downstream.
  double next_open_unit() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }
};

// Seed for the i-th member of an ensemble with base seed `base`.
// Mixing (base, index) keeps ensembles reproducible and independent of
// the order in which workers pick up indices.
inline std::uint64_t derive_stream(std::uint64_t base, std::uint64_t index) {
  SplitMix64 g(base ^ (0xD1B54A32D192ED03ull * (index + 1)));
  g.next();
  return g.next();
}

// One draw of the circular complex normal with E|s|^2 = 1 and E s^2 = 0:
// s = (a + ib)/sqrt(2) with a, b independent standard normals (Box-Muller).
inline Complex standard_complex_normal(SplitMix64& g) {
  const double u1 = g.next_open_unit();
  const double u2 = g.next_open_unit();
  const double radius = std::sqrt(-std::log(u1));  // = sqrt(-2 log u)/sqrt(2)
  return std::polar(radius, kTwoPi * u2);
}

}  // namespace diffamp
