#pragma once

// Reference computations for tests. Each one is written from the defining
// formula with plain loops and shares no code path with the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hardy/detail/rng.hpp"
#include "hardy/series.hpp"

namespace oracle {

using hardy::Complex;
using hardy::TruncatedSeries;
using Coeffs = std::vector<Complex>;

inline Coeffs coeffs(const TruncatedSeries& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

/// Truncated Cauchy product c_k = sum_{i+j=k} a_i b_j, k <= N.
inline Coeffs cauchy(const Coeffs& a, const Coeffs& b, std::size_t N) {
  Coeffs c(N + 1);
  for (std::size_t k = 0; k <= N; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      const std::size_t j = k - i;
      if (i < a.size() && j < b.size()) c[k] += a[i] * b[j];
    }
  }
  return c;
}

/// sum a_n z^n with explicit powers.
inline Complex power_sum(const Coeffs& a, Complex z) {
  Complex s{}, p{1.0, 0.0};
  for (const auto& c : a) {
    s += c * p;
    p *= z;
  }
  return s;
}

inline Complex pairing(const Coeffs& g, const Coeffs& e) {
  Complex s{};
  for (std::size_t k = 0; k < std::min(g.size(), e.size()); ++k) s += g[k] * std::conj(e[k]);
  return s;
}

inline double sq_norm(const Coeffs& a) {
  double s = 0.0;
  for (const auto& c : a) s += std::norm(c);
  return s;
}

/// sum_n |<g, e_n>|^2 over explicit element lists.
inline double frame_sum(const Coeffs& g, const std::vector<Coeffs>& elements) {
  double s = 0.0;
  for (const auto& e : elements) s += std::norm(pairing(g, e));
  return s;
}

/// Elements phi^n f (n <= K) by repeated naive convolution truncated to N.
inline std::vector<Coeffs> orbit(const Coeffs& phi, const Coeffs& f, std::size_t K, std::size_t N) {
  std::vector<Coeffs> out;
  Coeffs cur(N + 1);
  for (std::size_t k = 0; k <= N && k < f.size(); ++k) cur[k] = f[k];
  out.push_back(cur);
  for (std::size_t n = 1; n <= K; ++n) {
    cur = cauchy(phi, cur, N);
    out.push_back(cur);
  }
  return out;
}

/// Taylor coefficients of (|a|/a)(a - z)/(1 - conj(a) z) from the geometric series.
inline Coeffs blaschke_coeffs(Complex a, std::size_t N) {
  const Complex u = std::abs(a) / a;
  Coeffs c(N + 1);
  c[0] = u * a;
  Complex p{1.0, 0.0};
  for (std::size_t n = 1; n <= N; ++n) {
    c[n] = -u * (1.0 - std::norm(a)) * p;
    p *= std::conj(a);
  }
  return c;
}

inline Complex blaschke_eval(Complex a, Complex z) { return (std::abs(a) / a) * (a - z) / (1.0 - std::conj(a) * z); }

/// (N+1) x count synthesis matrix with orbit elements as columns.
inline Eigen::MatrixXcd synthesis(const std::vector<Coeffs>& elements, std::size_t N) {
  Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(N + 1), static_cast<Eigen::Index>(elements.size()));
  for (std::size_t n = 0; n < elements.size(); ++n) {
    for (std::size_t k = 0; k <= N && k < elements[n].size(); ++k) {
      V(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(n)) = elements[n][k];
    }
  }
  return V;
}

inline double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

using Rng = hardy::detail::SplitMix64;

inline Coeffs random_coeffs(Rng& rng, std::size_t order) {
  Coeffs c(order + 1);
  for (auto& x : c) x = rng.complex_unit_box();
  return c;
}

inline TruncatedSeries random_series(Rng& rng, std::size_t order) {
  return TruncatedSeries::from_coeffs(random_coeffs(rng, order));
}

inline std::size_t random_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.next() % (hi - lo + 1));
}

}  // namespace oracle
