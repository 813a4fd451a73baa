#include "hardy/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/FFT>

namespace hardy {

namespace {

std::size_t effective_length(const TruncatedSeries& s, std::size_t cap) {
  const auto deg = s.degree();
  if (!deg) return 0;
  return std::min(*deg + 1, cap);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<Complex> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("series: coefficient sequence is empty");
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (!std::isfinite(coeffs[n].real()) || !std::isfinite(coeffs[n].imag())) {
      throw std::invalid_argument("series: coefficient " + std::to_string(n) + " is not finite");
    }
  }
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
  return TruncatedSeries(std::vector<Complex>(order + 1));
}

TruncatedSeries TruncatedSeries::monomial(std::size_t power, std::size_t order) {
  std::vector<Complex> c(std::max(order, power) + 1);
  c[power] = 1.0;
  c.resize(order + 1);
  return TruncatedSeries(std::move(c));
}

std::optional<std::size_t> TruncatedSeries::degree() const {
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    if (coeffs_[n] != Complex{}) return n;
  }
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<Complex> c(coeffs_.begin(),
                         coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order + 1, coeffs_.size())));
  c.resize(order + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_from_coeffs(std::vector<Complex> coeffs) {
  return TruncatedSeries::from_coeffs(std::move(coeffs));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::max(a.order(), b.order());
  std::vector<Complex> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = a[n] + b[n];
  return TruncatedSeries::from_coeffs(std::move(c));
}

TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b) {
  return add(a, scale(-1.0, b));
}

TruncatedSeries scale(Complex c, const TruncatedSeries& f) {
  std::vector<Complex> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : out) x *= c;
  return TruncatedSeries::from_coeffs(std::move(out));
}

TruncatedSeries mul_direct(const TruncatedSeries& a, const TruncatedSeries& b,
                           std::size_t target_order) {
  const std::size_t cap = target_order + 1;
  const std::size_t la = effective_length(a, cap);
  const std::size_t lb = effective_length(b, cap);
  std::vector<Complex> c(cap);
  for (std::size_t k = 0; k < cap; ++k) {
    if (la == 0 || lb == 0) break;
    // i ranges over max(0, k-lb+1) .. min(k, la-1)
    const std::size_t lo = k + 1 > lb ? k + 1 - lb : 0;
    const std::size_t hi = std::min(k, la - 1);
    Complex acc{};
    for (std::size_t i = lo; i <= hi && lo <= hi; ++i) acc += a[i] * b[k - i];
    c[k] = acc;
  }
  return TruncatedSeries::from_coeffs(std::move(c));
}

TruncatedSeries mul_fft(const TruncatedSeries& a, const TruncatedSeries& b,
                        std::size_t target_order) {
  const std::size_t cap = target_order + 1;
  const std::size_t la = effective_length(a, cap);
  const std::size_t lb = effective_length(b, cap);
  if (la == 0 || lb == 0) return TruncatedSeries::zero(target_order);

  const std::size_t len = next_pow2(la + lb - 1);
  std::vector<Complex> xa(len), xb(len), fa, fb, prod;
  std::copy_n(a.coeffs().begin(), la, xa.begin());
  std::copy_n(b.coeffs().begin(), lb, xb.begin());

  Eigen::FFT<double> fft;
  fft.fwd(fa, xa);
  fft.fwd(fb, xb);
  for (std::size_t i = 0; i < len; ++i) fa[i] *= fb[i];
  fft.inv(prod, fa);

  std::vector<Complex> c(cap);
  std::copy_n(prod.begin(), std::min(cap, la + lb - 1), c.begin());
  return TruncatedSeries::from_coeffs(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t target_order,
                    std::size_t fft_threshold) {
  const std::size_t cap = target_order + 1;
  const std::size_t shorter = std::min(effective_length(a, cap), effective_length(b, cap));
  if (shorter <= fft_threshold) return mul_direct(a, b, target_order);
  return mul_fft(a, b, target_order);
}

Complex inner_product(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  Complex acc{};
  for (std::size_t k = 0; k <= n; ++k) acc += f[k] * std::conj(g[k]);
  return acc;
}

double norm_squared(const TruncatedSeries& f) {
  double acc = 0.0;
  for (const auto& a : f.coeffs()) acc += std::norm(a);
  return acc;
}

double norm(const TruncatedSeries& f) { return std::sqrt(norm_squared(f)); }

Complex eval_at(const TruncatedSeries& f, Complex z) {
  if (std::abs(z) > 1.0 + 1e-12) {
    throw std::domain_error("eval_at: point lies outside the closed unit disk");
  }
  Complex acc{};
  const auto c = f.coeffs();
  for (std::size_t n = c.size(); n-- > 0;) acc = acc * z + c[n];
  return acc;
}

Complex unit_root(std::size_t j, std::size_t m) {
  // Reduce to the first quadrant so that 1, i, -1, -i come out exactly.
  const std::size_t k = j % m;
  const std::size_t q = (4 * k) / m;
  const std::size_t rem = 4 * k - q * m;  // 4k = q m + rem
  const double theta = std::numbers::pi / 2.0 * static_cast<double>(rem) / static_cast<double>(m);
  const Complex base = rem == 0 ? Complex{1.0, 0.0} : Complex{std::cos(theta), std::sin(theta)};
  switch (q % 4) {
    case 0: return base;
    case 1: return {-base.imag(), base.real()};
    case 2: return -base;
    default: return {base.imag(), -base.real()};
  }
}

BoundaryGrid::BoundaryGrid(std::size_t size) {
  if (size == 0) throw std::invalid_argument("boundary grid: size must be at least 1");
  points_.reserve(size);
  for (std::size_t j = 0; j < size; ++j) points_.push_back(unit_root(j, size));
}

BoundarySamples boundary_samples(const TruncatedSeries& f, const BoundaryGrid& grid) {
  BoundarySamples out{grid, {}, f.order()};
  out.values.reserve(grid.size());
  const auto c = f.coeffs();
  const std::size_t m = grid.size();
  for (std::size_t j = 0; j < m; ++j) {
    // z^n at a root of unity is another root of unity: index (j n) mod m.
    Complex acc{};
    for (std::size_t n = 0; n < c.size(); ++n) {
      if (c[n] == Complex{}) continue;
      acc += c[n] * unit_root((j * n) % m, m);
    }
    out.values.push_back(acc);
  }
  return out;
}

BoundaryNorm norm_via_boundary(const BoundarySamples& samples) {
  double acc = 0.0;
  for (const auto& v : samples.values) acc += std::norm(v);
  const auto m = static_cast<double>(samples.values.size());
  return {std::sqrt(acc / m), samples.values.size() > 2 * samples.source_order};
}

}  // namespace hardy
