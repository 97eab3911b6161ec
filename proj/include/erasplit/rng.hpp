#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace erasplit {

// Deterministic scalar transforms on top of std::mt19937_64. The std
// distribution objects are implementation-defined, so they are avoided
// everywhere reproducibility across toolchains matters.

// Uniform in [0, 1), 53-bit resolution.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

// Integer in [0, n), n > 0. Rejection-free modulo is fine here: n is tiny
// compared to 2^64 and the bias is far below anything observable.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

// Standard normal via Box-Muller. Consumes two draws, returns one value.
inline double normal(std::mt19937_64& rng) {
  double u1 = 1.0 - uniform_unit(rng);  // (0, 1], keeps the log finite
  double u2 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

// Splits one seed into decorrelated per-task seeds (splitmix64 step).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace erasplit
