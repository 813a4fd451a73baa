#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardy/series.hpp"
#include "hardy/symbols.hpp"

namespace hardy {

struct Tolerances {
  double inner_tol = 1e-9;
  double rank_tol = 1e-10;
  /// Relative threshold below which A_est counts as numerically zero.
  double eig_tol = 1e-12;

  bool operator==(const Tolerances&) const = default;
};

enum class OutputFormat { json, csv };

struct OutputSpec {
  OutputFormat format = OutputFormat::json;
  /// Empty means standard output.
  std::string path;

  bool operator==(const OutputSpec&) const = default;
};

/// One experiment: symbol phi, seed f, truncation order N, orbit length K
/// (elements phi^0 f .. phi^K f) and boundary grid size M.
struct ExperimentConfig {
  SymbolSpec symbol = MonomialSymbol{1};
  std::vector<Complex> seed_coeffs{Complex{1.0, 0.0}};
  std::size_t truncation_order = 16;
  std::size_t orbit_length = 16;
  std::size_t boundary_grid = 256;
  Tolerances tolerances;
  OutputSpec output;
};

/// Thrown for configurations that violate their invariants.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Enforces N >= 1, K >= 1, M > 4N, positive tolerances, a valid symbol and a
/// nonempty finite seed. Throws ConfigError.
void validate(const ExperimentConfig& config);

TruncatedSeries seed_series(const ExperimentConfig& config);

}  // namespace hardy
