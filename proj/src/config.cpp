#include "hardy/config.hpp"

#include <cmath>

namespace hardy {

void validate(const ExperimentConfig& config) {
  if (config.truncation_order < 1) throw ConfigError("config: truncation_order must be at least 1");
  if (config.orbit_length < 1) throw ConfigError("config: orbit_length must be at least 1");
  if (config.boundary_grid <= 4 * config.truncation_order) {
    throw ConfigError("config: boundary_grid must exceed 4 * truncation_order");
  }
  const auto& t = config.tolerances;
  if (!(t.inner_tol > 0.0) || !(t.rank_tol > 0.0) || !(t.eig_tol > 0.0)) {
    throw ConfigError("config: tolerances must be positive");
  }
  try {
    validate(config.symbol);
    (void)seed_series(config);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

TruncatedSeries seed_series(const ExperimentConfig& config) {
  return TruncatedSeries::from_coeffs(config.seed_coeffs);
}

}  // namespace hardy
