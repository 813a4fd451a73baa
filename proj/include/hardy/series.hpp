#pragma once

// Truncated power series z -> sum_{n<=N} a_n z^n used as finite surrogates
// for elements of the Hardy space H^2 of the unit disk.
//
// The monomials {z^n} are orthonormal in H^2, so every norm and inner product
// here is evaluated in coefficient form. Boundary sampling on roots of unity
// is kept as an independent cross-check path.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hardy {

using Complex = std::complex<double>;

/// Shorter-operand length above which `mul` switches to FFT convolution.
inline constexpr std::size_t kDefaultFftThreshold = 64;

class TruncatedSeries {
 public:
  /// Throws std::invalid_argument on empty input or a non-finite coefficient.
  static TruncatedSeries from_coeffs(std::vector<Complex> coeffs);
  static TruncatedSeries zero(std::size_t order);
  static TruncatedSeries monomial(std::size_t power, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }

  /// Coefficient of z^n; zero beyond the stored order.
  Complex operator[](std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Complex{};
  }

  /// Index of the highest nonzero coefficient, nullopt for the zero series.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return !degree().has_value(); }

  /// Zero-pads or cuts to the requested order.
  TruncatedSeries truncated(std::size_t order) const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  explicit TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}

  std::vector<Complex> coeffs_;
};

TruncatedSeries series_from_coeffs(std::vector<Complex> coeffs);

/// Coefficientwise sum; the shorter operand is zero-padded.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(Complex c, const TruncatedSeries& f);

/// Cauchy product truncated to `target_order`.
///
/// Direct convolution is used whenever the shorter operand (after dropping
/// trailing zeros) has at most `fft_threshold` coefficients; otherwise the
/// product goes through a zero-padded FFT. Sparse low-degree factors such as
/// z^m therefore always take the exact path.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t target_order,
                    std::size_t fft_threshold = kDefaultFftThreshold);
TruncatedSeries mul_direct(const TruncatedSeries& a, const TruncatedSeries& b,
                           std::size_t target_order);
TruncatedSeries mul_fft(const TruncatedSeries& a, const TruncatedSeries& b,
                        std::size_t target_order);

/// <f, g> = sum_n a_n conj(b_n), summed in ascending n.
Complex inner_product(const TruncatedSeries& f, const TruncatedSeries& g);
double norm_squared(const TruncatedSeries& f);
double norm(const TruncatedSeries& f);

/// Horner evaluation; throws std::domain_error for |z| > 1 + 1e-12.
Complex eval_at(const TruncatedSeries& f, Complex z);

/// e^{2 pi i j / m}, exact at the quarter points.
Complex unit_root(std::size_t j, std::size_t m);

class BoundaryGrid {
 public:
  /// Throws std::invalid_argument for size 0.
  explicit BoundaryGrid(std::size_t size);

  std::size_t size() const { return points_.size(); }
  Complex point(std::size_t j) const { return points_[j]; }
  std::span<const Complex> points() const { return points_; }

 private:
  std::vector<Complex> points_;
};

struct BoundarySamples {
  BoundaryGrid grid;
  std::vector<Complex> values;
  std::size_t source_order = 0;
};

BoundarySamples boundary_samples(const TruncatedSeries& f, const BoundaryGrid& grid);

struct BoundaryNorm {
  double value = 0.0;
  /// Grid size exceeds twice the source order, so the quadrature is exact.
  bool aliasing_free = false;
};

BoundaryNorm norm_via_boundary(const BoundarySamples& samples);

}  // namespace hardy
