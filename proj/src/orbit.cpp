#include "hardy/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace hardy {

std::size_t Orbit::exact_prefix() const {
  const auto it = std::find(truncated.begin(), truncated.end(), true);
  return static_cast<std::size_t>(it - truncated.begin());
}

TruncatedSeries apply(const SymbolRealization& sym, const TruncatedSeries& f, std::size_t order) {
  return mul(sym.series(), f, order);
}

Orbit orbit(const SymbolRealization& sym, const TruncatedSeries& f, std::size_t K, std::size_t order) {
  Orbit out{sym, f, order, {}, {}, {}};
  out.elements.reserve(K + 1);
  out.norms.reserve(K + 1);
  out.truncated.reserve(K + 1);

  const auto symbol_degree = sym.series().degree();

  // Degree of the untruncated phi^n f while it is known to be exact.
  // A zero element stays zero, so tracking stops.
  bool tracking = f.degree().has_value();
  std::size_t exact_degree = f.degree().value_or(0);
  bool truncated = tracking && exact_degree > order;

  out.elements.push_back(f.truncated(order));
  out.norms.push_back(norm(out.elements.back()));
  out.truncated.push_back(truncated);

  for (std::size_t n = 1; n <= K; ++n) {
    out.elements.push_back(apply(sym, out.elements.back(), order));
    out.norms.push_back(norm(out.elements.back()));
    if (!truncated && tracking) {
      if (!symbol_degree) {
        tracking = false;
      } else if (!sym.series_exact()) {
        truncated = true;
      } else {
        exact_degree += *symbol_degree;
        truncated = exact_degree > order;
      }
    }
    out.truncated.push_back(truncated);
  }
  return out;
}

OperatorSection matrix_section(const SymbolRealization& sym, std::size_t order) {
  OperatorSection out{Eigen::MatrixXcd::Zero(order + 1, order + 1), order};
  const auto& phi = sym.series();
  for (std::size_t i = 0; i <= order; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      out.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = phi[i - j];
    }
  }
  return out;
}

TruncatedSeries apply_section(const OperatorSection& section, const TruncatedSeries& f) {
  const auto g = f.truncated(section.order);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(section.order + 1));
  for (std::size_t n = 0; n <= section.order; ++n) v(static_cast<Eigen::Index>(n)) = g[n];
  const Eigen::VectorXcd w = section.matrix * v;
  return TruncatedSeries::from_coeffs(std::vector<Complex>(w.data(), w.data() + w.size()));
}

std::string to_string(DecayClass c) {
  switch (c) {
    case DecayClass::decays_to_zero: return "decays_to_zero";
    case DecayClass::bounded_non_decaying: return "bounded_non_decaying";
    case DecayClass::grows: return "grows";
  }
  return "bounded_non_decaying";
}

DecayReport decay_profile(const Orbit& orb) {
  if (orb.length() < 8) throw std::invalid_argument("decay_profile: orbit needs at least 8 elements");

  DecayReport report;
  std::size_t used = orb.exact_prefix();
  if (used < 8) {
    used = orb.length();
    report.used_truncated_elements = true;
  }

  for (std::size_t n = 0; n < used; ++n) {
    if (orb.norms[n] == 0.0) {
      report.classification = DecayClass::decays_to_zero;
      report.rate_estimate = 0.0;
      report.slope = -INFINITY;
      report.fit_begin = 0;
      report.fit_end = n + 1;
      return report;
    }
  }

  report.fit_begin = used / 2;
  report.fit_end = used;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const auto count = static_cast<double>(report.fit_end - report.fit_begin);
  for (std::size_t n = report.fit_begin; n < report.fit_end; ++n) {
    const double x = static_cast<double>(n);
    const double y = std::log(orb.norms[n]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  report.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  report.rate_estimate = std::exp(report.slope);
  if (report.slope < -kDecayDeadBand) {
    report.classification = DecayClass::decays_to_zero;
  } else if (report.slope > kDecayDeadBand) {
    report.classification = DecayClass::grows;
  } else {
    report.classification = DecayClass::bounded_non_decaying;
  }
  return report;
}

}  // namespace hardy
