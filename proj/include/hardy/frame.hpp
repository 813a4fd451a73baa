#pragma once

// Frame sums, Gram matrices and compressed frame operators for an orbit.
//
// With V the (N+1) x (K+1) synthesis section whose columns are the orbit
// coefficient vectors, the Gram matrix is V* V and the frame section is V V*.
// Bounds reported here are finite-section estimates tagged with (N, K); they
// are not claims about the infinite system.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "hardy/orbit.hpp"

namespace hardy {

/// Raised when an eigen- or singular-value solver does not converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GramMatrix {
  /// entries(m, n) = <phi^n f, phi^m f>
  Eigen::MatrixXcd entries;
};

struct FrameSection {
  Eigen::MatrixXcd matrix;
  std::size_t orbit_len = 0;
  std::size_t order = 0;
};

/// Relative tolerance for the `tight` flag.
inline constexpr double kTightTol = 1e-8;
/// A_est below this multiple of B_est is reported as numerically zero.
inline constexpr double kNumericallyZeroLower = 1e-12;

struct FrameBounds {
  double A_est = 0.0;
  double B_est = 0.0;
  std::size_t N = 0;
  std::size_t K = 0;
  bool tight = false;
  bool numerically_zero_lower = false;

  bool operator==(const FrameBounds&) const = default;
};

/// sum_{n<=K} |<g, phi^n f>|^2
double frame_sum(const TruncatedSeries& g, const Orbit& orb);

/// Cumulative frame sums; the last entry equals frame_sum.
std::vector<double> partial_frame_sums(const TruncatedSeries& g, const Orbit& orb);

GramMatrix gram(const Orbit& orb);

FrameSection frame_section(const Orbit& orb);

/// Same section built from the first `count` orbit elements only.
FrameSection frame_section(const Orbit& orb, std::size_t count);

/// Ascending eigenvalues of a Hermitian matrix. Throws NumericalError.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m);

/// Extremal eigenvalues of the section, clamped below at zero.
FrameBounds frame_bounds_estimate(const FrameSection& sec);

/// S g = sum_n <g, phi^n f> phi^n f. Requires deg(g) <= orbit order.
TruncatedSeries apply_frame_operator(const TruncatedSeries& g, const Orbit& orb);

/// One FrameBounds per (N, K) pair, rows ordered by N then K. Both lists must
/// be nonempty and strictly ascending.
std::vector<FrameBounds> bounds_vs_truncation(const SymbolSpec& sym, const TruncatedSeries& f,
                                              const std::vector<std::size_t>& N_list,
                                              const std::vector<std::size_t>& K_list);

}  // namespace hardy
