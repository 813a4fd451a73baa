#pragma once

// SplitMix64 with a fixed double mapping, so scripted experiments produce the
// same pseudo-random inputs on every standard library.

#include <cstdint>
#include <vector>

#include "hardy/series.hpp"

namespace hardy::detail {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Real and imaginary parts uniform in [-1, 1).
  Complex complex_unit_box() {
    const double re = uniform(-1.0, 1.0);
    return {re, uniform(-1.0, 1.0)};
  }

 private:
  std::uint64_t state_;
};

inline TruncatedSeries random_series(SplitMix64& rng, std::size_t order) {
  std::vector<Complex> c(order + 1);
  for (auto& x : c) x = rng.complex_unit_box();
  return TruncatedSeries::from_coeffs(std::move(c));
}

}  // namespace hardy::detail
