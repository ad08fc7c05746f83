#pragma once

#include <cstdint>

#include "geolie/rational.hpp"

namespace geolie {

/// Deterministic 64-bit generator (splitmix64). Self-contained so that seeded
/// runs produce byte-identical reports on every platform; the standard
/// library's distributions are implementation-defined and would not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : m_state(seed) {}

  std::uint64_t next_u64() {
    m_state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = m_state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi], inclusive.
  int next_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  bool next_bool(double p = 0.5) { return next_double() < p; }

  /// Small exact rational: numerator in [-max_num, max_num], denominator in [1, max_den].
  Rat next_rational(int max_num, int max_den) {
    return Rat(next_int(-max_num, max_num)) / Rat(next_int(1, max_den));
  }

 private:
  std::uint64_t m_state;
};

}  // namespace geolie
