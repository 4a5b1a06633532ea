#pragma once

#include <cstdint>
#include <random>

namespace penner {

// Deterministic helpers on top of mt19937_64; bit-level extraction keeps
// sampled streams identical for a given seed regardless of library internals.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Positive values spread multiplicatively around 1.
inline double log_uniform(std::mt19937_64& rng, double log_lo = -1.0, double log_hi = 1.0) {
  return std::exp(uniform(rng, log_lo, log_hi));
}

}  // namespace penner
