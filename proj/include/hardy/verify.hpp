#pragma once

// Scripted numerical experiments, one per structural claim about orbits
// {phi^n f}. Each run returns structured evidence and a verdict; a verdict is
// "inconsistent" only when a stated inequality fails beyond tolerance.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/config.hpp"
#include "hardy/frame.hpp"

namespace hardy {

enum class PropositionId { P1, P2, P3, P4i, P4ii, Ex_constant, Ex_half_shift, Ex_3_1, P6 };

/// Unknown proposition ids or configs that do not fit the requested suite.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_string(PropositionId id);
/// Throws UsageError for unknown ids.
PropositionId parse_proposition(const std::string& id);
const std::vector<PropositionId>& all_propositions();

enum class Verdict { consistent, inconsistent, inconclusive };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct VerificationParameters {
  std::size_t N = 0;
  std::size_t K = 0;
  std::size_t M = 0;
  Tolerances tolerances;

  bool operator==(const VerificationParameters&) const = default;
};

struct VerificationReport {
  PropositionId proposition = PropositionId::P1;
  Verdict verdict = Verdict::inconclusive;
  nlohmann::json evidence = nlohmann::json::object();
  VerificationParameters parameters;
  std::string note;

  bool operator==(const VerificationReport&) const = default;
};

/// Frame bounds at K = N for a ladder of truncation orders, with log-log
/// growth exponents of A_est and B_est between the first and last rung.
struct BoundsTrend {
  std::vector<FrameBounds> rows;
  double lower_exponent = 0.0;
  double upper_exponent = 0.0;
  /// A_est numerically zero at the last rung, or lower_exponent <= -kTrendExponent.
  bool lower_vanishing = false;
  /// upper_exponent >= kTrendExponent.
  bool upper_blowup = false;
};

inline constexpr double kTrendExponent = 0.5;

/// Rungs N/4, N/2, N (deduplicated, each at least 2).
BoundsTrend bounds_trend(const SymbolSpec& sym, const TruncatedSeries& f, std::size_t N_max,
                         double eig_tol = kNumericallyZeroLower);

/// Validates the config (ConfigError) and runs the suite for `id`. Throws
/// UsageError when the config symbol or seed does not fit the suite.
VerificationReport verify(PropositionId id, const ExperimentConfig& config);

}  // namespace hardy
