#pragma once

// Multiplication symbols phi in H^infinity: declarative specs, their Taylor
// realizations at a fixed truncation order, and boundary-based tests for
// inner-ness and the sup-norm.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "hardy/series.hpp"

namespace hardy {

struct ConstantSymbol {
  Complex c;
};

struct MonomialSymbol {
  std::size_t m = 1;
};

/// phi(z) = c z
struct ScaledShiftSymbol {
  Complex c;
};

struct PolynomialSymbol {
  std::vector<Complex> coeffs;
};

struct BlaschkeZero {
  Complex a;
  std::size_t multiplicity = 1;
};

/// scale * prefactor * prod_k b_{a_k}(z)^{mult_k}, b_a(z) = (|a|/a)(a - z)/(1 - conj(a) z).
/// A zero at the origin contributes a plain factor z. The prefactor is
/// unimodular; `scale` is an arbitrary complex multiplier (1 keeps the
/// product inner).
struct BlaschkeSymbol {
  std::vector<BlaschkeZero> zeros;
  Complex prefactor{1.0, 0.0};
  Complex scale{1.0, 0.0};
};

using SymbolSpec =
    std::variant<ConstantSymbol, MonomialSymbol, ScaledShiftSymbol, PolynomialSymbol, BlaschkeSymbol>;

/// "constant", "monomial", "scaled_shift", "polynomial" or "blaschke".
std::string kind_name(const SymbolSpec& spec);

/// Throws std::invalid_argument when a Blaschke zero has |a| >= 1 - 1e-9, the
/// prefactor is not unimodular to 1e-12, or a coefficient is not finite.
void validate(const SymbolSpec& spec);

/// Blaschke products, z^m with m >= 1, c z and constants with |c| = 1.
bool structurally_inner(const SymbolSpec& spec);

/// True when the Taylor series of phi is a polynomial (so a realization at a
/// sufficiently large order is exact).
bool is_polynomial(const SymbolSpec& spec);

/// Closed-form value phi(z); Blaschke factors are evaluated as rationals.
Complex evaluate(const SymbolSpec& spec, Complex z);

class SymbolRealization {
 public:
  SymbolRealization(SymbolSpec spec, TruncatedSeries series, double sup_norm_estimate,
                    bool exactly_inner, bool series_exact);

  const SymbolSpec& spec() const { return spec_; }
  const TruncatedSeries& series() const { return series_; }
  double sup_norm_estimate() const { return sup_norm_; }
  bool exactly_inner() const { return exactly_inner_; }

  /// Whether `series` equals phi exactly (polynomial spec of degree <= order).
  bool series_exact() const { return series_exact_; }

  Complex operator()(Complex z) const { return evaluate(spec_, z); }

 private:
  SymbolSpec spec_;
  TruncatedSeries series_;
  double sup_norm_;
  bool exactly_inner_;
  bool series_exact_;
};

/// Taylor expansion of phi to `order`; the sup-norm estimate is taken on a
/// boundary grid of max(256, 8 (order + 1)) points.
SymbolRealization realize(const SymbolSpec& spec, std::size_t order);

enum class InnernessVerdict { inner, non_inner, inconclusive };

std::string to_string(InnernessVerdict v);

struct InnernessReport {
  double max_deviation = 0.0;
  /// Fraction of grid points with |phi| < 1 - tol. Finite stand-in for the
  /// measure of the set where phi is strictly sub-unimodular.
  double sub_unit_fraction = 0.0;
  InnernessVerdict verdict = InnernessVerdict::inconclusive;
  double tolerance = 0.0;
  std::size_t grid_size = 0;
  bool used_series = false;
};

struct InnernessOptions {
  /// Evaluate the truncated series instead of the closed form.
  bool use_series = false;
  double exact_tol = 1e-9;
  double series_tol = 1e-6;
};

/// Requires grid.size() > 4 * order (std::invalid_argument otherwise).
/// Deviations within a factor 100 above tolerance are reported inconclusive.
InnernessReport innerness_test(const SymbolRealization& sym, const BoundaryGrid& grid,
                               InnernessOptions options = {});

/// Largest |phi| over the grid; by the maximum principle this estimates the
/// sup over the disk. Requires grid.size() > 4 * order.
double sup_norm_estimate(const SymbolRealization& sym, const BoundaryGrid& grid);

}  // namespace hardy
