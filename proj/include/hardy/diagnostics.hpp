#pragma once

// Structural diagnostics on orbits and symbols: reproducing kernels, zeros of
// seeds inside the disk, numerical cyclicity rank, residue-class splitting for
// z^m symbols and the position of phi(D) relative to the unit circle.

#include <cstddef>
#include <optional>
#include <vector>

#include "hardy/orbit.hpp"
#include "hardy/series.hpp"
#include "hardy/symbols.hpp"

namespace hardy {

/// Truncation of K_{z0}(z) = 1 / (1 - conj(z0) z), coefficients conj(z0)^n.
struct KernelVector {
  Complex center;
  TruncatedSeries series;
};

/// Throws std::domain_error for |z0| >= 1.
KernelVector reproducing_kernel(Complex z0, std::size_t order);

struct KernelWitness {
  /// max_n |<phi^n f, K_{z0}>| over the whole orbit.
  double max_pairing = 0.0;
  /// Same maximum restricted to the exact (untruncated) prefix.
  double max_pairing_exact = 0.0;
  double max_norm = 0.0;
  std::size_t argmax = 0;
};

KernelWitness kernel_orthogonality_witness(const Orbit& orb, Complex z0);

struct DiskZeros {
  /// |root| < 1 - margin
  std::vector<Complex> inside;
  /// 1 - margin <= |root| <= 1 + margin
  std::vector<Complex> boundary_ambiguous;
  std::size_t degree = 0;
};

/// Roots of the degree-exact polynomial via its companion matrix.
/// Throws std::domain_error for the zero polynomial and std::invalid_argument
/// for margin outside (0, 0.5).
DiskZeros zeros_in_disk(const TruncatedSeries& f, double margin = 1e-6);

inline constexpr double kDefaultRankTol = 1e-10;

struct CyclicityReport {
  std::size_t rank = 0;
  std::size_t span_dimension_deficit = 0;
  /// Unit vector orthogonal to every orbit element, present when deficit > 0.
  std::optional<TruncatedSeries> orthogonal_complement_witness;
  std::vector<double> singular_values;
  double rank_tol = kDefaultRankTol;
};

/// Numerical rank of the (K+1) x (N+1) orbit coefficient matrix with
/// singular values counted above rank_tol * sigma_max.
CyclicityReport cyclicity_rank(const Orbit& orb, double rank_tol = kDefaultRankTol);

struct ResidueClassDecomposition {
  std::size_t modulus = 0;
  /// projections[r] keeps the coefficients with index = r (mod modulus).
  std::vector<TruncatedSeries> projections;
};

/// Throws std::invalid_argument for m < 2.
ResidueClassDecomposition residue_projection(const TruncatedSeries& g, std::size_t m);

struct ImageDiagnostics {
  double min_modulus = 0.0;
  double max_modulus = 0.0;
  bool intersects_T = false;
};

/// Samples |phi| on circles of radius i / radial_levels, i = 1..radial_levels
/// (the outermost level is the boundary limit). Throws for radial_levels < 2.
ImageDiagnostics image_circle_intersection(const SymbolRealization& sym, const BoundaryGrid& grid,
                                           std::size_t radial_levels, double tol = 1e-9);

}  // namespace hardy
