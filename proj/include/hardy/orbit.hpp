#pragma once

// The multiplication operator T_phi f = phi f, its finite sections in the
// monomial basis, and orbits {phi^n f : 0 <= n <= K}.

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hardy/series.hpp"
#include "hardy/symbols.hpp"

namespace hardy {

struct Orbit {
  SymbolRealization symbol;
  TruncatedSeries seed;
  std::size_t order = 0;
  /// elements[n] = phi^n f truncated to `order`.
  std::vector<TruncatedSeries> elements;
  std::vector<double> norms;
  /// Set when elements[n] differs from the untruncated phi^n f. Sticky in n.
  std::vector<bool> truncated;

  std::size_t length() const { return elements.size(); }
  /// Number of leading elements that are exact.
  std::size_t exact_prefix() const;
};

/// mul(sym.series, f, order).
TruncatedSeries apply(const SymbolRealization& sym, const TruncatedSeries& f, std::size_t order);

/// K + 1 elements phi^0 f .. phi^K f, each truncated to `order`.
Orbit orbit(const SymbolRealization& sym, const TruncatedSeries& f, std::size_t K, std::size_t order);

struct OperatorSection {
  /// Lower-triangular Toeplitz, entry (i, j) = phi_{i-j}.
  Eigen::MatrixXcd matrix;
  std::size_t order = 0;
};

OperatorSection matrix_section(const SymbolRealization& sym, std::size_t order);

/// Section times coefficient vector of f (f is cut or padded to the section order).
TruncatedSeries apply_section(const OperatorSection& section, const TruncatedSeries& f);

enum class DecayClass { decays_to_zero, bounded_non_decaying, grows };

std::string to_string(DecayClass c);

struct DecayReport {
  DecayClass classification = DecayClass::bounded_non_decaying;
  /// exp(slope) of the least-squares fit of log ||phi^n f|| against n.
  double rate_estimate = 1.0;
  double slope = 0.0;
  std::size_t fit_begin = 0;
  std::size_t fit_end = 0;
  /// The exact prefix was shorter than 8, so truncated elements entered the fit.
  bool used_truncated_elements = false;
};

/// Slope dead-band separating decay, bounded and growth classes.
inline constexpr double kDecayDeadBand = 1e-3;

/// Fits the tail half of the exact prefix (or of the whole orbit when the
/// exact prefix has fewer than 8 elements). Throws std::invalid_argument for
/// orbits with fewer than 8 elements.
DecayReport decay_profile(const Orbit& orb);

}  // namespace hardy
