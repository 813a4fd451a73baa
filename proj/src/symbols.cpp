#include "hardy/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hardy {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool unimodular(Complex z) { return std::abs(std::abs(z) - 1.0) < 1e-12; }

Complex blaschke_factor(Complex a, Complex z) {
  if (a == Complex{}) return z;
  return std::abs(a) / a * (a - z) / (1.0 - std::conj(a) * z);
}

// Taylor series of b_a to `order`: (|a|/a) [a - (1 - |a|^2) sum_{n>=1} conj(a)^{n-1} z^n].
TruncatedSeries blaschke_factor_series(Complex a, std::size_t order) {
  if (a == Complex{}) return TruncatedSeries::monomial(1, order);
  const Complex unit = std::abs(a) / a;
  const double gap = 1.0 - std::norm(a);
  std::vector<Complex> c(order + 1);
  c[0] = unit * a;
  Complex power{1.0, 0.0};
  for (std::size_t n = 1; n <= order; ++n) {
    c[n] = -unit * gap * power;
    power *= std::conj(a);
  }
  return TruncatedSeries::from_coeffs(std::move(c));
}

std::size_t default_grid_size(std::size_t order) { return std::max<std::size_t>(256, 8 * (order + 1)); }

}  // namespace

std::string kind_name(const SymbolSpec& spec) {
  return std::visit(overloaded{
                        [](const ConstantSymbol&) { return std::string("constant"); },
                        [](const MonomialSymbol&) { return std::string("monomial"); },
                        [](const ScaledShiftSymbol&) { return std::string("scaled_shift"); },
                        [](const PolynomialSymbol&) { return std::string("polynomial"); },
                        [](const BlaschkeSymbol&) { return std::string("blaschke"); },
                    },
                    spec);
}

void validate(const SymbolSpec& spec) {
  std::visit(overloaded{
                 [](const ConstantSymbol& s) {
                   if (!finite(s.c)) throw std::invalid_argument("symbol: constant is not finite");
                 },
                 [](const MonomialSymbol&) {},
                 [](const ScaledShiftSymbol& s) {
                   if (!finite(s.c)) throw std::invalid_argument("symbol: shift scale is not finite");
                 },
                 [](const PolynomialSymbol& s) {
                   if (s.coeffs.empty()) throw std::invalid_argument("symbol: polynomial has no coefficients");
                   for (const auto& c : s.coeffs)
                     if (!finite(c)) throw std::invalid_argument("symbol: polynomial coefficient is not finite");
                 },
                 [](const BlaschkeSymbol& s) {
                   if (!finite(s.prefactor) || !unimodular(s.prefactor))
                     throw std::invalid_argument("symbol: Blaschke prefactor must be unimodular");
                   if (!finite(s.scale)) throw std::invalid_argument("symbol: Blaschke scale is not finite");
                   for (const auto& z : s.zeros) {
                     if (!finite(z.a) || std::abs(z.a) >= 1.0 - 1e-9)
                       throw std::invalid_argument("symbol: Blaschke zero must lie inside the disk (|a| < 1 - 1e-9)");
                     if (z.multiplicity == 0)
                       throw std::invalid_argument("symbol: Blaschke zero multiplicity must be positive");
                   }
                 },
             },
             spec);
}

bool structurally_inner(const SymbolSpec& spec) {
  return std::visit(overloaded{
                        [](const ConstantSymbol& s) { return unimodular(s.c); },
                        [](const MonomialSymbol& s) { return s.m >= 1; },
                        [](const ScaledShiftSymbol& s) { return unimodular(s.c); },
                        [](const PolynomialSymbol&) { return false; },
                        [](const BlaschkeSymbol& s) { return unimodular(s.scale); },
                    },
                    spec);
}

bool is_polynomial(const SymbolSpec& spec) {
  if (const auto* b = std::get_if<BlaschkeSymbol>(&spec)) {
    return std::all_of(b->zeros.begin(), b->zeros.end(),
                       [](const BlaschkeZero& z) { return z.a == Complex{}; });
  }
  return true;
}

Complex evaluate(const SymbolSpec& spec, Complex z) {
  return std::visit(overloaded{
                        [](const ConstantSymbol& s) { return s.c; },
                        [z](const MonomialSymbol& s) {
                          Complex acc{1.0, 0.0};
                          for (std::size_t k = 0; k < s.m; ++k) acc *= z;
                          return acc;
                        },
                        [z](const ScaledShiftSymbol& s) { return s.c * z; },
                        [z](const PolynomialSymbol& s) {
                          Complex acc{};
                          for (std::size_t n = s.coeffs.size(); n-- > 0;) acc = acc * z + s.coeffs[n];
                          return acc;
                        },
                        [z](const BlaschkeSymbol& s) {
                          Complex acc = s.scale * s.prefactor;
                          for (const auto& zero : s.zeros) {
                            const Complex f = blaschke_factor(zero.a, z);
                            for (std::size_t k = 0; k < zero.multiplicity; ++k) acc *= f;
                          }
                          return acc;
                        },
                    },
                    spec);
}

SymbolRealization::SymbolRealization(SymbolSpec spec, TruncatedSeries series, double sup_norm_estimate,
                                     bool exactly_inner, bool series_exact)
    : spec_(std::move(spec)),
      series_(std::move(series)),
      sup_norm_(sup_norm_estimate),
      exactly_inner_(exactly_inner),
      series_exact_(series_exact) {}

SymbolRealization realize(const SymbolSpec& spec, std::size_t order) {
  validate(spec);
  TruncatedSeries series = std::visit(
      overloaded{
          [&](const ConstantSymbol& s) { return scale(s.c, TruncatedSeries::monomial(0, order)); },
          [&](const MonomialSymbol& s) { return TruncatedSeries::monomial(s.m, order); },
          [&](const ScaledShiftSymbol& s) { return scale(s.c, TruncatedSeries::monomial(1, order)); },
          [&](const PolynomialSymbol& s) { return TruncatedSeries::from_coeffs(s.coeffs).truncated(order); },
          [&](const BlaschkeSymbol& s) {
            auto acc = scale(s.scale * s.prefactor, TruncatedSeries::monomial(0, order));
            for (const auto& zero : s.zeros) {
              const auto factor = blaschke_factor_series(zero.a, order);
              for (std::size_t k = 0; k < zero.multiplicity; ++k) acc = mul(acc, factor, order);
            }
            return acc;
          },
      },
      spec);

  bool exact = false;
  if (is_polynomial(spec)) {
    const auto full = std::visit(
        overloaded{
            [](const ConstantSymbol& s) { return TruncatedSeries::from_coeffs({s.c}); },
            [](const MonomialSymbol& s) { return TruncatedSeries::monomial(s.m, s.m); },
            [](const ScaledShiftSymbol& s) { return TruncatedSeries::from_coeffs({Complex{}, s.c}); },
            [](const PolynomialSymbol& s) { return TruncatedSeries::from_coeffs(s.coeffs); },
            [](const BlaschkeSymbol& s) {
              std::size_t deg = 0;
              for (const auto& z : s.zeros) deg += z.multiplicity;
              return scale(s.scale * s.prefactor, TruncatedSeries::monomial(deg, deg));
            },
        },
        spec);
    exact = full.degree().value_or(0) <= order;
  }

  SymbolRealization provisional(spec, series, 0.0, structurally_inner(spec), exact);
  const double sup = sup_norm_estimate(provisional, BoundaryGrid(default_grid_size(order)));
  return SymbolRealization(spec, std::move(series), sup, structurally_inner(spec), exact);
}

std::string to_string(InnernessVerdict v) {
  switch (v) {
    case InnernessVerdict::inner: return "inner";
    case InnernessVerdict::non_inner: return "non_inner";
    case InnernessVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

InnernessReport innerness_test(const SymbolRealization& sym, const BoundaryGrid& grid,
                               InnernessOptions options) {
  if (grid.size() <= 4 * sym.series().order()) {
    throw std::invalid_argument("innerness_test: grid size must exceed 4 * truncation order");
  }
  InnernessReport report;
  report.grid_size = grid.size();
  report.used_series = options.use_series;
  report.tolerance = options.use_series ? options.series_tol : options.exact_tol;

  std::size_t below = 0;
  for (const auto& z : grid.points()) {
    const double modulus = std::abs(options.use_series ? eval_at(sym.series(), z) : sym(z));
    report.max_deviation = std::max(report.max_deviation, std::abs(modulus - 1.0));
    if (modulus < 1.0 - report.tolerance) ++below;
  }
  report.sub_unit_fraction = static_cast<double>(below) / static_cast<double>(grid.size());

  if (report.max_deviation < report.tolerance) {
    report.verdict = InnernessVerdict::inner;
  } else if (report.max_deviation < 100.0 * report.tolerance) {
    report.verdict = InnernessVerdict::inconclusive;
  } else {
    report.verdict = InnernessVerdict::non_inner;
  }
  return report;
}

double sup_norm_estimate(const SymbolRealization& sym, const BoundaryGrid& grid) {
  if (grid.size() <= 4 * sym.series().order()) {
    throw std::invalid_argument("sup_norm_estimate: grid size must exceed 4 * truncation order");
  }
  double sup = 0.0;
  for (const auto& z : grid.points()) sup = std::max(sup, std::abs(sym(z)));
  return sup;
}

}  // namespace hardy
