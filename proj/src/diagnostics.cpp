#include "hardy/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "hardy/frame.hpp"

namespace hardy {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc{};
  for (std::size_t n = c.size(); n-- > 0;) acc = acc * z + c[n];
  return acc;
}

Complex horner_derivative(const std::vector<Complex>& c, Complex z) {
  Complex acc{};
  for (std::size_t n = c.size(); n-- > 1;) acc = acc * z + static_cast<double>(n) * c[n];
  return acc;
}

}  // namespace

KernelVector reproducing_kernel(Complex z0, std::size_t order) {
  if (std::abs(z0) >= 1.0) throw std::domain_error("reproducing_kernel: center must lie in the open disk");
  std::vector<Complex> c(order + 1);
  Complex power{1.0, 0.0};
  for (std::size_t n = 0; n <= order; ++n) {
    c[n] = power;
    power *= std::conj(z0);
  }
  return {z0, TruncatedSeries::from_coeffs(std::move(c))};
}

KernelWitness kernel_orthogonality_witness(const Orbit& orb, Complex z0) {
  const auto kernel = reproducing_kernel(z0, orb.order);
  const std::size_t exact = orb.exact_prefix();
  KernelWitness out;
  for (std::size_t n = 0; n < orb.length(); ++n) {
    const double pairing = std::abs(inner_product(orb.elements[n], kernel.series));
    if (pairing > out.max_pairing) {
      out.max_pairing = pairing;
      out.argmax = n;
    }
    if (n < exact) out.max_pairing_exact = std::max(out.max_pairing_exact, pairing);
    out.max_norm = std::max(out.max_norm, orb.norms[n]);
  }
  return out;
}

DiskZeros zeros_in_disk(const TruncatedSeries& f, double margin) {
  if (!(margin > 0.0 && margin < 0.5)) throw std::invalid_argument("zeros_in_disk: margin must lie in (0, 0.5)");
  const auto deg = f.degree();
  if (!deg) throw std::domain_error("zeros_in_disk: zero polynomial has no isolated zeros");

  std::vector<Complex> c(f.coeffs().begin(), f.coeffs().begin() + idx(*deg + 1));
  DiskZeros out;
  out.degree = *deg;
  if (*deg == 0) return out;

  // Companion matrix of the monic polynomial z^d + sum_{k<d} (c_k / c_d) z^k.
  const std::size_t d = *deg;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(idx(d), idx(d));
  for (std::size_t i = 1; i < d; ++i) companion(idx(i), idx(i - 1)) = 1.0;
  for (std::size_t k = 0; k < d; ++k) companion(idx(k), idx(d - 1)) = -c[k] / c[d];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericalError("zeros_in_disk: companion eigensolver failed");

  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    Complex root = solver.eigenvalues()(i);
    // Newton polish, kept only while the residual shrinks.
    for (int it = 0; it < 3; ++it) {
      const Complex dp = horner_derivative(c, root);
      if (dp == Complex{}) break;
      const Complex next = root - horner(c, root) / dp;
      if (std::abs(horner(c, next)) >= std::abs(horner(c, root))) break;
      root = next;
    }
    const double r = std::abs(root);
    if (r < 1.0 - margin) {
      out.inside.push_back(root);
    } else if (r <= 1.0 + margin) {
      out.boundary_ambiguous.push_back(root);
    }
  }
  const auto by_modulus = [](Complex a, Complex b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return std::arg(a) < std::arg(b);
  };
  std::sort(out.inside.begin(), out.inside.end(), by_modulus);
  std::sort(out.boundary_ambiguous.begin(), out.boundary_ambiguous.end(), by_modulus);
  return out;
}

CyclicityReport cyclicity_rank(const Orbit& orb, double rank_tol) {
  const std::size_t rows = orb.length();
  const std::size_t dim = orb.order + 1;
  // Rows hold conjugated coefficients, so a null vector w satisfies <w, e_n> = 0.
  Eigen::MatrixXcd coeffs(idx(rows), idx(dim));
  for (std::size_t n = 0; n < rows; ++n) {
    for (std::size_t i = 0; i < dim; ++i) coeffs(idx(n), idx(i)) = std::conj(orb.elements[n][i]);
  }

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(coeffs, Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) throw NumericalError("cyclicity_rank: SVD failed");

  CyclicityReport out;
  out.rank_tol = rank_tol;
  const auto& sv = svd.singularValues();
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rank_tol * sigma_max) ++out.rank;
  }
  out.span_dimension_deficit = dim - out.rank;
  if (out.span_dimension_deficit == 0) return out;

  // Null space = span of the trailing right singular vectors.
  const Eigen::MatrixXcd null_basis = svd.matrixV().rightCols(idx(out.span_dimension_deficit));
  // Project monomials onto the null space and keep the first one with the
  // largest projection, so simple deficiencies yield readable witnesses (e.g. z).
  Eigen::VectorXcd best;
  double best_norm = -1.0;
  for (std::size_t k = 0; k < dim; ++k) {
    const Eigen::VectorXcd proj = null_basis * null_basis.row(idx(k)).adjoint();
    const double pn = proj.norm();
    if (pn > best_norm * (1.0 + 1e-9)) {
      best_norm = pn;
      best = proj;
    }
  }
  best /= best.norm();
  // Fix the phase: largest coefficient real and positive; chop rounding noise.
  Eigen::Index lead = 0;
  best.cwiseAbs().maxCoeff(&lead);
  best *= std::abs(best(lead)) / best(lead);
  std::vector<Complex> w(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Complex v = best(idx(i));
    if (std::abs(v.real()) < 1e-13) v.real(0.0);
    if (std::abs(v.imag()) < 1e-13) v.imag(0.0);
    w[i] = v;
  }
  auto witness = TruncatedSeries::from_coeffs(std::move(w));
  out.orthogonal_complement_witness = scale(1.0 / norm(witness), witness);
  return out;
}

ResidueClassDecomposition residue_projection(const TruncatedSeries& g, std::size_t m) {
  if (m < 2) throw std::invalid_argument("residue_projection: modulus must be at least 2");
  ResidueClassDecomposition out{m, {}};
  out.projections.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<Complex> c(g.order() + 1);
    for (std::size_t n = r; n <= g.order(); n += m) c[n] = g[n];
    out.projections.push_back(TruncatedSeries::from_coeffs(std::move(c)));
  }
  return out;
}

ImageDiagnostics image_circle_intersection(const SymbolRealization& sym, const BoundaryGrid& grid,
                                           std::size_t radial_levels, double tol) {
  if (radial_levels < 2) throw std::invalid_argument("image_circle_intersection: need at least 2 radial levels");
  ImageDiagnostics out{INFINITY, 0.0, false};
  for (std::size_t i = 1; i <= radial_levels; ++i) {
    const double r = static_cast<double>(i) / static_cast<double>(radial_levels);
    for (const auto& p : grid.points()) {
      const double mod = std::abs(sym(r * p));
      out.min_modulus = std::min(out.min_modulus, mod);
      out.max_modulus = std::max(out.max_modulus, mod);
    }
  }
  out.intersects_T = out.min_modulus <= 1.0 + tol && out.max_modulus >= 1.0 - tol;
  return out;
}

}  // namespace hardy
