#include "hardy/frame.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace hardy {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

bool strictly_ascending(const std::vector<std::size_t>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

}  // namespace

double frame_sum(const TruncatedSeries& g, const Orbit& orb) {
  double acc = 0.0;
  for (const auto& e : orb.elements) acc += std::norm(inner_product(g, e));
  return acc;
}

std::vector<double> partial_frame_sums(const TruncatedSeries& g, const Orbit& orb) {
  std::vector<double> out;
  out.reserve(orb.length());
  double acc = 0.0;
  for (const auto& e : orb.elements) {
    acc += std::norm(inner_product(g, e));
    out.push_back(acc);
  }
  return out;
}

GramMatrix gram(const Orbit& orb) {
  const std::size_t len = orb.length();
  GramMatrix out{Eigen::MatrixXcd(idx(len), idx(len))};
  for (std::size_t m = 0; m < len; ++m) {
    out.entries(idx(m), idx(m)) = inner_product(orb.elements[m], orb.elements[m]).real();
    for (std::size_t n = 0; n < m; ++n) {
      const Complex v = inner_product(orb.elements[n], orb.elements[m]);
      out.entries(idx(m), idx(n)) = v;
      out.entries(idx(n), idx(m)) = std::conj(v);
    }
  }
  return out;
}

FrameSection frame_section(const Orbit& orb) { return frame_section(orb, orb.length()); }

FrameSection frame_section(const Orbit& orb, std::size_t count) {
  count = std::min(count, orb.length());
  const std::size_t dim = orb.order + 1;
  Eigen::MatrixXcd synthesis(idx(dim), idx(count));
  for (std::size_t n = 0; n < count; ++n) {
    for (std::size_t i = 0; i < dim; ++i) synthesis(idx(i), idx(n)) = orb.elements[n][i];
  }
  FrameSection out{synthesis * synthesis.adjoint(), count, orb.order};
  // Enforce exact Hermitian symmetry.
  for (Eigen::Index i = 0; i < out.matrix.rows(); ++i) {
    out.matrix(i, i) = out.matrix(i, i).real();
    for (Eigen::Index j = 0; j < i; ++j) out.matrix(j, i) = std::conj(out.matrix(i, j));
  }
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "hermitian eigensolver failed to converge (size " << m.rows()
        << ", max |entry| " << m.cwiseAbs().maxCoeff() << ")";
    throw NumericalError(msg.str());
  }
  return solver.eigenvalues();
}

FrameBounds frame_bounds_estimate(const FrameSection& sec) {
  const Eigen::VectorXd ev = hermitian_eigenvalues(sec.matrix);
  FrameBounds out;
  out.N = sec.order;
  out.K = sec.orbit_len == 0 ? 0 : sec.orbit_len - 1;
  out.A_est = std::max(0.0, ev(0));
  out.B_est = std::max(0.0, ev(ev.size() - 1));
  out.tight = std::abs(out.B_est - out.A_est) < kTightTol * out.B_est;
  out.numerically_zero_lower = out.A_est <= kNumericallyZeroLower * out.B_est;
  return out;
}

TruncatedSeries apply_frame_operator(const TruncatedSeries& g, const Orbit& orb) {
  if (g.degree().value_or(0) > orb.order) {
    throw std::invalid_argument("apply_frame_operator: degree of g exceeds the orbit truncation order");
  }
  std::vector<Complex> acc(orb.order + 1);
  for (const auto& e : orb.elements) {
    const Complex c = inner_product(g, e);
    for (std::size_t i = 0; i <= orb.order; ++i) acc[i] += c * e[i];
  }
  return TruncatedSeries::from_coeffs(std::move(acc));
}

std::vector<FrameBounds> bounds_vs_truncation(const SymbolSpec& sym, const TruncatedSeries& f,
                                              const std::vector<std::size_t>& N_list,
                                              const std::vector<std::size_t>& K_list) {
  if (N_list.empty() || K_list.empty()) throw std::invalid_argument("bounds_vs_truncation: empty list");
  if (!strictly_ascending(N_list) || !strictly_ascending(K_list)) {
    throw std::invalid_argument("bounds_vs_truncation: lists must be strictly ascending");
  }
  std::vector<FrameBounds> table;
  table.reserve(N_list.size() * K_list.size());
  for (const std::size_t N : N_list) {
    const auto orb = orbit(realize(sym, N), f, K_list.back(), N);
    for (const std::size_t K : K_list) table.push_back(frame_bounds_estimate(frame_section(orb, K + 1)));
  }
  return table;
}

}  // namespace hardy
