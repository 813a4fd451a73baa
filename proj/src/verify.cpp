#include "hardy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hardy/detail/rng.hpp"
#include "hardy/diagnostics.hpp"
#include "hardy/report_io.hpp"

namespace hardy {

namespace {

constexpr std::uint64_t kBatterySeed = 0x5eed0f4a11ce5ULL;
constexpr std::size_t kRandomProbes = 100;
constexpr std::size_t kRadialLevels = 16;
constexpr double kDiskMargin = 1e-6;
/// Relative pairing below which a kernel witnesses span deficiency.
constexpr double kKernelPairingTol = 1e-9;

struct Case {
  std::string label;
  SymbolSpec symbol;
  TruncatedSeries seed;
};

TruncatedSeries poly(std::vector<Complex> c) { return TruncatedSeries::from_coeffs(std::move(c)); }

json case_json(const Case& c) {
  return json{{"label", c.label}, {"symbol", to_json(c.symbol)}, {"seed", coeffs_to_json(c.seed.coeffs())}};
}

bool zero_lower(const FrameBounds& b, double eig_tol) { return b.A_est <= eig_tol * b.B_est; }

double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

VerificationParameters parameters_of(const ExperimentConfig& c) {
  return {c.truncation_order, c.orbit_length, c.boundary_grid, c.tolerances};
}

bool is_unit_seed(const TruncatedSeries& f) { return f.degree().value_or(1) == 0 && f[0] == Complex{1.0, 0.0}; }

// Least-squares slope of y against index.
double index_slope(const std::vector<double>& y) {
  const auto n = static_cast<double>(y.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double x = static_cast<double>(i);
    sx += x;
    sy += y[i];
    sxx += x * x;
    sxy += x * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double log_exponent(double first, double last, double n_first, double n_last) {
  if (!(first > 0.0) || !(last > 0.0) || n_last <= n_first) return 0.0;
  return std::log(last / first) / std::log(n_last / n_first);
}

// ---------------------------------------------------------------------------

VerificationReport verify_p1(const ExperimentConfig& cfg) {
  const std::size_t N = cfg.truncation_order, K = cfg.orbit_length;
  const auto& tol = cfg.tolerances;
  const BoundaryGrid grid(cfg.boundary_grid);
  const std::vector<Case> cases{
      {"config", cfg.symbol, seed_series(cfg)},
      {"constant_half", ConstantSymbol{0.5}, poly({1.0})},
      {"half_shift", ScaledShiftSymbol{0.5}, poly({1.0})},
      {"unnormalized_shift", ScaledShiftSymbol{1.5}, poly({1.0})},
  };

  json rows = json::array();
  bool all_ok = true;
  for (const auto& c : cases) {
    const auto sym = realize(c.symbol, N);
    const auto inn = innerness_test(sym, grid, {.use_series = false, .exact_tol = tol.inner_tol});
    const double sup = sym.sup_norm_estimate();
    const bool normalized = sup <= 1.0 + 1e-12;
    const auto orb = orbit(sym, c.seed, K, N);
    const auto trend = bounds_trend(c.symbol, c.seed, N, tol.eig_tol);
    const bool frame_fails = trend.lower_vanishing || trend.upper_blowup;
    const bool applicable = inn.verdict == InnernessVerdict::non_inner;

    json row = case_json(c);
    row["innerness"] = to_json(inn);
    row["sup_norm_estimate"] = sup;
    row["normalized"] = normalized;
    row["bounds_trend"] = to_json(trend);
    row["frame_fails"] = frame_fails;
    row["applicable"] = applicable;
    bool decays = false;
    if (orb.length() >= 8) {
      const auto decay = decay_profile(orb);
      decays = decay.classification == DecayClass::decays_to_zero;
      row["decay"] = to_json(decay);
    } else {
      row["decay"] = nullptr;
    }
    // Decay of phi^n f is only claimed for symbols bounded by one.
    const bool ok = !applicable || (frame_fails && (!normalized || decays));
    row["ok"] = ok;
    all_ok = all_ok && ok;
    rows.push_back(row);
  }

  VerificationReport r;
  r.proposition = PropositionId::P1;
  r.parameters = parameters_of(cfg);
  r.evidence = json{{"cases", rows}};
  r.verdict = all_ok ? Verdict::consistent : Verdict::inconsistent;
  r.note =
      "non-inner symbols must fail the frame condition; norm decay is required only for sup-norm <= 1, "
      "unnormalized symbols are reported through their upper-bound growth";
  return r;
}

VerificationReport verify_p2(const ExperimentConfig& cfg) {
  const auto* mono = std::get_if<MonomialSymbol>(&cfg.symbol);
  if (!mono || mono->m < 2) throw UsageError("P2 requires a monomial symbol z^m with m >= 2");
  const std::size_t m = mono->m;
  const std::size_t N = cfg.truncation_order, K = cfg.orbit_length;
  const auto& tol = cfg.tolerances;
  const auto sym = realize(cfg.symbol, N);

  detail::SplitMix64 rng(kBatterySeed);
  std::vector<Complex> random_class0(4 * m + 1);
  for (std::size_t k = 0; k <= 4; ++k) random_class0[k * m] = rng.complex_unit_box();

  std::vector<Complex> one_plus_zm(m + 1);
  one_plus_zm[0] = 1.0;
  one_plus_zm[m] = 1.0;

  const std::vector<Case> cases{
      {"config", cfg.symbol, seed_series(cfg)},
      {"one", cfg.symbol, poly({1.0})},
      {"one_plus_zm", cfg.symbol, poly(one_plus_zm)},
      {"random_in_zm", cfg.symbol, poly(random_class0)},
      {"mixed_classes", cfg.symbol, poly({1.0, 1.0})},
  };

  json rows = json::array();
  bool all_ok = true;
  for (const auto& c : cases) {
    const auto orb = orbit(sym, c.seed, K, N);
    const auto cyc = cyclicity_rank(orb, tol.rank_tol);
    const auto bounds = frame_bounds_estimate(frame_section(orb));

    // Each residue class evolves on its own: class-r part of phi^n f equals phi^n f_r.
    const auto split = residue_projection(c.seed.truncated(N), m);
    bool confined = true;
    std::set<std::size_t> occupied;
    for (std::size_t r = 0; r < m; ++r) {
      if (!split.projections[r].is_zero()) occupied.insert(r);
      const auto orb_r = orbit(sym, split.projections[r], K, N);
      for (std::size_t n = 0; n < orb.length(); ++n) {
        confined = confined && residue_projection(orb.elements[n], m).projections[r] == orb_r.elements[n];
      }
    }

    json row = case_json(c);
    row["cyclicity"] = to_json(cyc);
    row["bounds"] = to_json(bounds);
    row["residue_classes_occupied"] = std::vector<std::size_t>(occupied.begin(), occupied.end());
    row["confined"] = confined;
    double witness_sum = 0.0;
    if (cyc.orthogonal_complement_witness) witness_sum = frame_sum(*cyc.orthogonal_complement_witness, orb);
    row["witness_frame_sum"] = witness_sum;
    if (occupied.size() == 1 && *occupied.begin() == 0) {
      row["frame_sum_z"] = frame_sum(TruncatedSeries::monomial(1, N), orb);
    }
    const bool ok = cyc.span_dimension_deficit > 0 && zero_lower(bounds, tol.eig_tol) &&
                    cyc.orthogonal_complement_witness && witness_sum <= tol.eig_tol * bounds.B_est && confined;
    row["ok"] = ok;
    all_ok = all_ok && ok;
    rows.push_back(row);
  }

  VerificationReport r;
  r.proposition = PropositionId::P2;
  r.parameters = parameters_of(cfg);
  r.evidence = json{{"m", m}, {"cases", rows}};
  r.verdict = all_ok ? Verdict::consistent : Verdict::inconsistent;
  r.note = "orbits of z^m stay inside the residue-class subspaces; every seed leaves a nonzero orthogonal complement";
  return r;
}

VerificationReport verify_p3(const ExperimentConfig& cfg) {
  const auto* constant = std::get_if<ConstantSymbol>(&cfg.symbol);
  if (!constant || std::abs(std::abs(constant->c) - 1.0) >= 1e-12) {
    throw UsageError("P3 requires a unimodular constant symbol");
  }
  const std::size_t N = cfg.truncation_order, K = cfg.orbit_length;
  const auto f = seed_series(cfg);
  const auto orb = orbit(realize(cfg.symbol, N), f, K, N);

  const std::vector<std::pair<std::string, TruncatedSeries>> probes{
      {"one", poly({1.0})}, {"seed", f}, {"one_plus_z", poly({1.0, 1.0})}};

  json rows = json::array();
  bool all_match = true, any_divergent = false;
  for (const auto& [label, g] : probes) {
    const auto sums = partial_frame_sums(g, orb);
    const double expected = std::norm(inner_product(g, f));
    const double slope = index_slope(sums);
    const bool match = std::abs(slope - expected) <= 1e-9 * std::max(1.0, expected);
    all_match = all_match && match;
    any_divergent = any_divergent || (match && expected > 0.0);
    json row{{"label", label},
             {"g", coeffs_to_json(g.coeffs())},
             {"expected_slope", expected},
             {"slope", slope},
             {"last_partial_sum", sums.back()},
             {"expected_last_partial_sum", expected * static_cast<double>(K + 1)},
             {"first_partial_sums", std::vector<double>(sums.begin(), sums.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(8, sums.size())))},
             {"matches", match}};
    rows.push_back(row);
  }

  std::vector<std::size_t> ks;
  for (const std::size_t k : {std::max<std::size_t>(1, K / 4), std::max<std::size_t>(1, K / 2), K}) {
    if (ks.empty() || k > ks.back()) ks.push_back(k);
  }
  const auto table = bounds_vs_truncation(cfg.symbol, f, {N}, ks);
  json trend = json::array();
  for (const auto& b : table) trend.push_back(to_json(b));
  const double exponent = log_exponent(table.front().B_est, table.back().B_est,
                                       static_cast<double>(ks.front() + 1), static_cast<double>(ks.back() + 1));
  const bool upper_diverges = ks.size() == 1 || exponent >= kTrendExponent;

  VerificationReport r;
  r.proposition = PropositionId::P3;
  r.parameters = parameters_of(cfg);
  r.evidence = json{{"probes", rows},
                    {"upper_bound_vs_K", trend},
                    {"upper_exponent", exponent},
                    {"upper_diverges", upper_diverges}};
  r.verdict = all_match && any_divergent && upper_diverges ? Verdict::consistent : Verdict::inconsistent;
  r.note = "partial frame sums grow linearly with slope |<g, f>|^2, so no finite upper bound exists";
  return r;
}

VerificationReport verify_p4i(const ExperimentConfig& cfg) {
  const std::size_t N = cfg.truncation_order, K = cfg.orbit_length;
  const auto& tol = cfg.tolerances;
  const BoundaryGrid grid(cfg.boundary_grid);
  const std::vector<Case> cases{
      {"config", cfg.symbol, seed_series(cfg)},
      {"scaled_blaschke", BlaschkeSymbol{{{0.5, 1}}, 1.0, 0.9}, poly({1.0})},
      {"constant_two", ConstantSymbol{2.0}, poly({1.0})},
      {"half_shift", ScaledShiftSymbol{0.5}, poly({1.0})},
      {"shift", MonomialSymbol{1}, poly({1.0})},
  };

  json rows = json::array();
  bool all_ok = true;
  for (const auto& c : cases) {
    const auto sym = realize(c.symbol, N);
    const auto image = image_circle_intersection(sym, grid, kRadialLevels);
    const auto orb = orbit(sym, c.seed, K, N);
    const auto trend = bounds_trend(c.symbol, c.seed, N, tol.eig_tol);

    json row = case_json(c);
    row["image"] = to_json(image);
    row["sup_norm_estimate"] = sym.sup_norm_estimate();
    row["bounds_trend"] = to_json(trend);
    std::string branch = "crosses_circle";
    bool ok = true;
    std::optional<DecayReport> decay;
    if (orb.length() >= 8) decay = decay_profile(orb);
    row["decay"] = decay ? to_json(*decay) : json(nullptr);

    if (!image.intersects_T && image.max_modulus < 1.0) {
      branch = "inside_disk";
      const double r = sym.sup_norm_estimate();
      double worst = -INFINITY;
      for (std::size_t n = 0; n < orb.length(); ++n) {
        worst = std::max(worst, orb.norms[n] - std::pow(r, static_cast<double>(n)) * orb.norms[0]);
      }
      row["contraction_excess"] = worst;
      ok = worst <= 1e-12 && decay && decay->classification == DecayClass::decays_to_zero && trend.lower_vanishing;
    } else if (!image.intersects_T && image.min_modulus > 1.0) {
      branch = "outside_disk";
      ok = decay && decay->classification == DecayClass::grows && trend.upper_blowup;
    }
    row["branch"] = branch;
    row["ok"] = ok;
    all_ok = all_ok && ok;
    rows.push_back(row);
  }

  VerificationReport r;
  r.proposition = PropositionId::P4i;
  r.parameters = parameters_of(cfg);
  r.evidence = json{{"radial_levels", kRadialLevels}, {"cases", rows}};
  r.verdict = all_ok ? Verdict::consistent : Verdict::inconsistent;
  r.note = "symbols whose image misses the unit circle give exponentially decaying or growing orbits and degenerate bounds";
  return r;
}

VerificationReport verify_p4ii(const ExperimentConfig& cfg) {
  const std::size_t N = cfg.truncation_order, K = cfg.orbit_length;
  const auto& tol = cfg.tolerances;
  const auto sym = realize(cfg.symbol, N);
  const std::vector<Case> cases{
      {"config", cfg.symbol, seed_series(cfg)},
      {"boundary_root", cfg.symbol, poly({1.0, -1.0})},
      {"zero_free", cfg.symbol, poly({1.0})},
      {"off_axis_root", cfg.symbol, poly({-Complex{0.3, 0.4}, 1.0})},
  };

  json rows = json::array();
  bool all_ok = true;
  for (const auto& c : cases) {
    const auto zeros = zeros_in_disk(c.seed, kDiskMargin);
    const auto orb = orbit(sym, c.seed, K, N);
    const auto bounds = frame_bounds_estimate(frame_section(orb));
    json witnesses = json::array();
    bool killed = true;
    for (const auto& z0 : zeros.inside) {
      const auto w = kernel_orthogonality_witness(orb, z0);
      const double rel = w.max_norm > 0.0 ? w.max_pairing_exact / w.max_norm : 0.0;
      killed = killed && rel < kKernelPairingTol;
      witnesses.push_back({{"z0", complex_to_json(z0)},
                           {"max_pairing", w.max_pairing},
                           {"max_pairing_exact_prefix", w.max_pairing_exact},
                           {"max_norm", w.max_norm},
                           {"relative_pairing", rel}});
    }
    const bool has_zero = !zeros.inside.empty();
    const bool ok = !has_zero || (killed && zero_lower(bounds, tol.eig_tol));

    json row = case_json(c);
    row["zeros"] = to_json(zeros);
    row["kernel_witnesses"] = witnesses;
    row["bounds"] = to_json(bounds);
    row["has_disk_zero"] = has_zero;
    row["ok"] = ok;
    all_ok = all_ok && ok;
    rows.push_back(row);
  }

  VerificationReport r;
  r.proposition = PropositionId::P4ii;
  r.parameters = parameters_of(cfg);
  r.evidence = json{{"margin", kDiskMargin}, {"cases", rows}};
  r.verdict = all_ok ? Verdict::consistent : Verdict::inconsistent;
  r.note = "a seed vanishing at z0 in the disk makes K_{z0} orthogonal to the orbit; roots within the margin of the circle are excluded";
  return r;
}

VerificationReport verify_ex_constant(const ExperimentConfig& cfg) {
  const auto* constant = std::get_if<ConstantSymbol>(&cfg.symbol);
  if (!constant || !(std::abs(constant->c) > 0.0 && std::abs(constant->c) < 1.0)) {
    throw UsageError("Ex_constant requires a constant symbol with 0 < |c| < 1");
  }
  const std::size_t N = cfg.truncation_order, K = cfg.orbit_length;
  const auto& tol = cfg.tolerances;
  const auto f = seed_series(cfg);
  const auto orb = orbit(realize(cfg.symbol, N), f, K, N);
  const double c2 = std::norm(constant->c);
  const double tail = std::pow(c2, static_cast<double>(K + 1));

  const std::vector<std::pair<std::string, TruncatedSeries>> probes{
      {"one", poly({1.0})}, {"seed", f}, {"one_plus_z", poly({1.0, 1.0})}, {"z", poly({0.0, 1.0})}};

  json rows = json::array();
  bool all_ok = true;
  for (const auto& [label, g] : probes) {
    const double pairing = std::norm(inner_product(g, f));
    const double sum = frame_sum(g, orb);
    const double partial = pairing * (1.0 - tail) / (1.0 - c2);
    const double limit = pairing / (1.0 - c2);
    const double partial_err = rel_err(sum, partial);
    const double limit_gap = std::abs(sum - limit);
    const double gap_bound = pairing * tail / (1.0 - c2) + 1e-12;
    const bool ok = partial_err <= 1e-12 && limit_gap <= gap_bound;
    all_ok = all_ok && ok;
    rows.push_back({{"label", label},
                    {"frame_sum", sum},
                    {"closed_form_partial", partial},
                    {"closed_form_limit", limit},
                    {"partial_rel_err", partial_err},
                    {"limit_gap", limit_gap},
                    {"limit_gap_bound", gap_bound},
                    {"ok", ok}});
  }
  const auto cyc = cyclicity_rank(orb, tol.rank_tol);
  const auto bounds = frame_bounds_estimate(frame_section(orb));
  const bool rank_one = cyc.rank == (f.is_zero() ? 0u : 1u);
  all_ok = all_ok && rank_one && zero_lower(bounds, tol.eig_tol);

  VerificationReport r;
  r.proposition = PropositionId::Ex_constant;
  r.parameters = parameters_of(cfg);
  r.evidence = json{{"c", complex_to_json(constant->c)},
                    {"probes", rows},
                    {"rank", cyc.rank},
                    {"rank_one", rank_one},
                    {"bounds", to_json(bounds)}};
  r.verdict = all_ok ? Verdict::consistent : Verdict::inconsistent;
  r.note = "frame sums equal |<g, f>|^2 / (1 - |c|^2) up to the geometric tail; the orbit spans one dimension";
  return r;
}

VerificationReport verify_ex_half_shift(const ExperimentConfig& cfg) {
  const auto* shift = std::get_if<ScaledShiftSymbol>(&cfg.symbol);
  if (!shift || !(std::abs(shift->c) > 0.0 && std::abs(shift->c) < 1.0)) {
    throw UsageError("Ex_half_shift requires a scaled shift c z with 0 < |c| < 1");
  }
  const auto f = seed_series(cfg);
  if (!is_unit_seed(f)) throw UsageError("Ex_half_shift requires the seed f = 1");
  const std::size_t N = cfg.truncation_order, K = cfg.orbit_length;
  if (K < N) throw UsageError("Ex_half_shift requires orbit_length >= truncation_order");
  const double c2 = std::norm(shift->c);
  const auto orb = orbit(realize(cfg.symbol, N), f, K, N);

  double worst_monomial = 0.0;
  json monomials = json::array();
  for (std::size_t k = 0; k <= N; ++k) {
    const double sum = frame_sum(TruncatedSeries::monomial(k, N), orb);
    const double want = std::pow(c2, static_cast<double>(k));
    const double err = std::abs(sum - want) / want;
    worst_monomial = std::max(worst_monomial, err);
    if (k < 8 || k == N) monomials.push_back({{"k", k}, {"frame_sum", sum}, {"closed_form", want}});
  }

  const auto bounds = frame_bounds_estimate(frame_section(orb));
  const double a_want = std::pow(c2, static_cast<double>(N));
  const double a_err = std::abs(bounds.A_est - a_want);
  const double b_err = std::abs(bounds.B_est - 1.0);

  const auto trend = bounds_trend(cfg.symbol, f, N, cfg.tolerances.eig_tol);
  double ladder_err = 0.0;
  json ladder = json::array();
  for (const auto& b : trend.rows) {
    const double want = std::pow(c2, static_cast<double>(b.N));
    ladder_err = std::max(ladder_err, std::abs(b.A_est - want));
    ladder.push_back({{"N", b.N}, {"A_est", b.A_est}, {"closed_form", want}});
  }

  const bool ok = worst_monomial <= 1e-12 && a_err <= 1e-12 && b_err <= 1e-12 && ladder_err <= 1e-12;
  VerificationReport r;
  r.proposition = PropositionId::Ex_half_shift;
  r.parameters = parameters_of(cfg);
  r.evidence = json{{"c", complex_to_json(shift->c)},
                    {"monomial_frame_sums", monomials},
                    {"monomial_max_rel_err", worst_monomial},
                    {"bounds", to_json(bounds)},
                    {"A_closed_form", a_want},
                    {"A_abs_err", a_err},
                    {"B_abs_err", b_err},
                    {"A_ladder", ladder},
                    {"A_ladder_max_abs_err", ladder_err}};
  r.verdict = ok ? Verdict::consistent : Verdict::inconsistent;
  r.note = "frame_sum(z^k) = |c|^(2k) and A_est(N) = |c|^(2N), so no positive lower bound survives as N grows";
  return r;
}

VerificationReport verify_ex_3_1(const ExperimentConfig& cfg) {
  const auto* mono = std::get_if<MonomialSymbol>(&cfg.symbol);
  if (!mono || mono->m != 1) throw UsageError("Ex_3_1 requires the symbol z (monomial with m = 1)");
  const auto f = seed_series(cfg);
  if (!is_unit_seed(f)) throw UsageError("Ex_3_1 requires the seed f = 1");
  const std::size_t N = cfg.truncation_order, K = cfg.orbit_length;
  if (K < N) throw UsageError("Ex_3_1 requires orbit_length >= truncation_order");
  const auto sym = realize(cfg.symbol, N);

  // f = 1: orthonormal basis, tight with A = B = 1.
  const auto basis = orbit(sym, f, K, N);
  const auto bounds = frame_bounds_estimate(frame_section(basis));
  const bool tight_ok = std::abs(bounds.A_est - 1.0) <= 1e-10 && std::abs(bounds.B_est - 1.0) <= 1e-10 && bounds.tight;

  detail::SplitMix64 rng(kBatterySeed);
  double parseval_err = 0.0;
  for (std::size_t i = 0; i < kRandomProbes; ++i) {
    const auto g = detail::random_series(rng, N);
    parseval_err = std::max(parseval_err, std::abs(frame_sum(g, basis) - norm_squared(g)) / norm_squared(g));
  }

  // f = 1 - z: frame sum is sum |a_n - a_{n+1}|^2.
  const auto diff_orbit = orbit(sym, poly({1.0, -1.0}), K, N);
  double difference_err = 0.0;
  for (std::size_t i = 0; i < kRandomProbes; ++i) {
    const auto h = detail::random_series(rng, N);
    double brute = 0.0;
    for (std::size_t n = 0; n <= N; ++n) brute += std::norm(h[n] - h[n + 1]);
    difference_err = std::max(difference_err, std::abs(frame_sum(h, diff_orbit) - brute) / brute);
  }

  // g_n = 1 + z + ... + z^n: frame sum 1 against norm^2 n + 1.
  const auto trend = bounds_trend(cfg.symbol, poly({1.0, -1.0}), N, cfg.tolerances.eig_tol);
  json ratios = json::array();
  bool ratios_exact = true;
  for (const auto& b : trend.rows) {
    const std::size_t n = b.N;
    const auto o = orbit(realize(cfg.symbol, n), poly({1.0, -1.0}), n, n);
    const auto g = poly(std::vector<Complex>(n + 1, Complex{1.0, 0.0}));
    const double ratio = frame_sum(g, o) / norm_squared(g);
    const double want = 1.0 / static_cast<double>(n + 1);
    ratios_exact = ratios_exact && ratio == want;
    ratios.push_back({{"N", n}, {"ratio", ratio}, {"closed_form", want}});
  }

  const bool ok = tight_ok && parseval_err <= 1e-10 && difference_err <= 1e-10 && ratios_exact &&
                  trend.lower_vanishing;
  VerificationReport r;
  r.proposition = PropositionId::Ex_3_1;
  r.parameters = parameters_of(cfg);
  r.evidence = json{{"unit_seed_bounds", to_json(bounds)},
                    {"tight_ok", tight_ok},
                    {"parseval_max_rel_err", parseval_err},
                    {"difference_seed_max_rel_err", difference_err},
                    {"difference_seed_ratios", ratios},
                    {"difference_seed_ratios_exact", ratios_exact},
                    {"difference_seed_trend", to_json(trend)},
                    {"random_probes", kRandomProbes}};
  r.verdict = ok ? Verdict::consistent : Verdict::inconsistent;
  r.note = "f = 1 gives the orthonormal basis (A = B = 1); f = 1 - z loses the lower bound along g_N = sum z^n";
  return r;
}

VerificationReport verify_p6(const ExperimentConfig& cfg) {
  const std::size_t N = cfg.truncation_order, K = cfg.orbit_length;
  const auto& tol = cfg.tolerances;
  const std::vector<Case> cases{
      {"config", cfg.symbol, seed_series(cfg)},
      {"shift_one", MonomialSymbol{1}, poly({1.0})},
      {"shift_one_minus_z", MonomialSymbol{1}, poly({1.0, -1.0})},
      {"shift_root_at_half", MonomialSymbol{1}, poly({-0.5, 1.0})},
      {"square_one", MonomialSymbol{2}, poly({1.0})},
      {"blaschke_half_one", BlaschkeSymbol{{{0.5, 1}}, 1.0, 1.0}, poly({1.0})},
  };

  json rows = json::array();
  std::vector<std::string> tension, contradiction;
  for (const auto& c : cases) {
    const auto orb = orbit(realize(c.symbol, N), c.seed, K, N);
    const auto cyc = cyclicity_rank(orb, tol.rank_tol);
    const auto trend = bounds_trend(c.symbol, c.seed, N, tol.eig_tol);
    const bool cyclic = cyc.span_dimension_deficit == 0;
    const bool frame_trend = !trend.lower_vanishing && !trend.upper_blowup;
    std::string status;
    if (cyclic && frame_trend) {
      status = "agree_frame";
    } else if (!cyclic && !frame_trend) {
      status = "agree_non_frame";
    } else if (cyclic) {
      status = "tension";
      tension.push_back(c.label);
    } else {
      status = "contradiction";
      contradiction.push_back(c.label);
    }
    json row = case_json(c);
    row["rank"] = cyc.rank;
    row["span_dimension_deficit"] = cyc.span_dimension_deficit;
    row["smallest_singular_value"] = cyc.singular_values.empty() ? 0.0 : cyc.singular_values.back();
    row["cyclic"] = cyclic;
    row["bounds_trend"] = to_json(trend);
    row["frame_trend"] = frame_trend;
    row["status"] = status;
    rows.push_back(row);
  }

  VerificationReport r;
  r.proposition = PropositionId::P6;
  r.parameters = parameters_of(cfg);
  r.evidence = json{{"cases", rows}, {"tension", tension}, {"contradiction", contradiction}};
  if (!contradiction.empty()) {
    r.verdict = Verdict::inconsistent;
    r.note = "a non-cyclic seed shows a frame-like bound trend";
  } else if (!tension.empty()) {
    r.verdict = Verdict::inconclusive;
    std::string labels;
    for (const auto& t : tension) labels += (labels.empty() ? "" : ", ") + t;
    r.note = "necessity (frame => cyclic) holds on every case; sufficiency is in tension: cyclic seed(s) " + labels +
             " show a vanishing lower-bound trend (f = 1 - z under the shift is cyclic yet not a frame)";
  } else {
    r.verdict = Verdict::consistent;
    r.note = "cyclicity and frame trend agree on every case";
  }
  return r;
}

}  // namespace

std::string to_string(PropositionId id) {
  switch (id) {
    case PropositionId::P1: return "P1";
    case PropositionId::P2: return "P2";
    case PropositionId::P3: return "P3";
    case PropositionId::P4i: return "P4i";
    case PropositionId::P4ii: return "P4ii";
    case PropositionId::Ex_constant: return "Ex_constant";
    case PropositionId::Ex_half_shift: return "Ex_half_shift";
    case PropositionId::Ex_3_1: return "Ex_3_1";
    case PropositionId::P6: return "P6";
  }
  return "P1";
}

PropositionId parse_proposition(const std::string& id) {
  for (const auto p : all_propositions()) {
    if (to_string(p) == id) return p;
  }
  throw UsageError("unknown proposition id '" + id + "'");
}

const std::vector<PropositionId>& all_propositions() {
  static const std::vector<PropositionId> ids{PropositionId::P1,          PropositionId::P2,
                                              PropositionId::P3,          PropositionId::P4i,
                                              PropositionId::P4ii,        PropositionId::Ex_constant,
                                              PropositionId::Ex_half_shift, PropositionId::Ex_3_1,
                                              PropositionId::P6};
  return ids;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::inconsistent: return "inconsistent";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "consistent") return Verdict::consistent;
  if (s == "inconsistent") return Verdict::inconsistent;
  if (s == "inconclusive") return Verdict::inconclusive;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

BoundsTrend bounds_trend(const SymbolSpec& sym, const TruncatedSeries& f, std::size_t N_max, double eig_tol) {
  std::vector<std::size_t> rungs;
  for (const std::size_t n : {std::max<std::size_t>(2, N_max / 4), std::max<std::size_t>(2, N_max / 2), N_max}) {
    if (n >= 1 && (rungs.empty() || n > rungs.back()) && n <= N_max) rungs.push_back(n);
  }
  if (rungs.empty()) rungs.push_back(N_max);

  BoundsTrend out;
  for (const std::size_t n : rungs) {
    out.rows.push_back(frame_bounds_estimate(frame_section(orbit(realize(sym, n), f, n, n))));
  }
  const auto& first = out.rows.front();
  const auto& last = out.rows.back();
  const auto n0 = static_cast<double>(first.N), n1 = static_cast<double>(last.N);
  out.lower_exponent = log_exponent(first.A_est, last.A_est, n0, n1);
  out.upper_exponent = log_exponent(first.B_est, last.B_est, n0, n1);
  out.lower_vanishing = zero_lower(last, eig_tol) || out.lower_exponent <= -kTrendExponent;
  out.upper_blowup = out.upper_exponent >= kTrendExponent;
  return out;
}

VerificationReport verify(PropositionId id, const ExperimentConfig& config) {
  validate(config);
  switch (id) {
    case PropositionId::P1: return verify_p1(config);
    case PropositionId::P2: return verify_p2(config);
    case PropositionId::P3: return verify_p3(config);
    case PropositionId::P4i: return verify_p4i(config);
    case PropositionId::P4ii: return verify_p4ii(config);
    case PropositionId::Ex_constant: return verify_ex_constant(config);
    case PropositionId::Ex_half_shift: return verify_ex_half_shift(config);
    case PropositionId::Ex_3_1: return verify_ex_3_1(config);
    case PropositionId::P6: return verify_p6(config);
  }
  throw UsageError("unknown proposition");
}

}  // namespace hardy
