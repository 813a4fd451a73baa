#include <doctest.h>

#include <cmath>

#include "hardy/report_io.hpp"
#include "hardy/verify.hpp"

using namespace hardy;

namespace {

ExperimentConfig battery(const std::string& id) {
  return load_config(std::string(HARDY_SOURCE_DIR) + "/configs/battery/" + id + ".json");
}

ExperimentConfig make_config(SymbolSpec sym, std::vector<Complex> seed, std::size_t N, std::size_t K) {
  ExperimentConfig c;
  c.symbol = std::move(sym);
  c.seed_coeffs = std::move(seed);
  c.truncation_order = N;
  c.orbit_length = K;
  c.boundary_grid = 4 * N + 8;
  return c;
}

}  // namespace

TEST_CASE("proposition ids round-trip and reject unknown names") {
  CHECK(all_propositions().size() == 9);
  for (const auto id : all_propositions()) CHECK(parse_proposition(to_string(id)) == id);
  CHECK_THROWS_AS(parse_proposition("bogus_id"), UsageError);
  CHECK_THROWS_AS(parse_proposition("p1"), UsageError);
  for (const auto v : {Verdict::consistent, Verdict::inconsistent, Verdict::inconclusive}) {
    CHECK(parse_verdict(to_string(v)) == v);
  }
  CHECK_THROWS(parse_verdict("maybe"));
}

TEST_CASE("battery verdicts") {
  for (const auto id : all_propositions()) {
    CAPTURE(to_string(id));
    const auto r = verify(id, battery(to_string(id)));
    CHECK(r.proposition == id);
    CHECK(r.verdict == (id == PropositionId::P6 ? Verdict::inconclusive : Verdict::consistent));
    CHECK_FALSE(r.note.empty());
  }
}

TEST_CASE("verify P3 on a unimodular constant") {
  const auto r = verify(PropositionId::P3, make_config(ConstantSymbol{std::polar(1.0, 0.4)}, {1.0}, 4, 40));
  CHECK(r.verdict == Verdict::consistent);
  const auto& first = r.evidence["probes"][0]["first_partial_sums"];
  for (std::size_t k = 0; k < first.size(); ++k) CHECK(std::abs(first[k].get<double>() - static_cast<double>(k + 1)) < 1e-13);
}

TEST_CASE("verify Ex_half_shift matches 4^-N") {
  const auto r = verify(PropositionId::Ex_half_shift, make_config(ScaledShiftSymbol{0.5}, {1.0}, 20, 20));
  CHECK(r.verdict == Verdict::consistent);
  CHECK(std::abs(r.evidence["bounds"]["A_est"].get<double>() - std::pow(4.0, -20.0)) < 1e-12);
}

TEST_CASE("verify P2 reports witness z with zero frame sum") {
  const auto r = verify(PropositionId::P2, make_config(MonomialSymbol{2}, {1.0}, 32, 32));
  CHECK(r.verdict == Verdict::consistent);
  const auto& c = r.evidence["cases"][0];
  CHECK(c["witness_frame_sum"].get<double>() == 0.0);
  CHECK(c["frame_sum_z"].get<double>() == 0.0);
  const auto& w = c["cyclicity"]["orthogonal_complement_witness"];
  REQUIRE(w.is_array());
  CHECK(w[1]["re"].get<double>() == 1.0);
}

TEST_CASE("verify Ex_3_1 evidence") {
  const auto r = verify(PropositionId::Ex_3_1, make_config(MonomialSymbol{1}, {1.0}, 16, 16));
  CHECK(r.verdict == Verdict::consistent);
  CHECK(r.evidence["unit_seed_bounds"]["A_est"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.evidence["unit_seed_bounds"]["tight"].get<bool>());
}

TEST_CASE("suites reject configs outside their hypotheses") {
  CHECK_THROWS_AS(verify(PropositionId::P2, make_config(MonomialSymbol{1}, {1.0}, 8, 8)), UsageError);
  CHECK_THROWS_AS(verify(PropositionId::P3, make_config(ConstantSymbol{0.5}, {1.0}, 8, 8)), UsageError);
  CHECK_THROWS_AS(verify(PropositionId::Ex_constant, make_config(ConstantSymbol{1.0}, {1.0}, 8, 8)), UsageError);
  CHECK_THROWS_AS(verify(PropositionId::Ex_half_shift, make_config(ScaledShiftSymbol{0.5}, {1.0, 1.0}, 8, 8)), UsageError);
  CHECK_THROWS_AS(verify(PropositionId::Ex_half_shift, make_config(ScaledShiftSymbol{0.5}, {1.0}, 8, 4)), UsageError);
  CHECK_THROWS_AS(verify(PropositionId::Ex_3_1, make_config(MonomialSymbol{2}, {1.0}, 8, 8)), UsageError);
}

TEST_CASE("verify validates the config") {
  auto c = make_config(MonomialSymbol{1}, {1.0}, 8, 8);
  c.boundary_grid = 32;
  CHECK_THROWS_AS(verify(PropositionId::Ex_3_1, c), ConfigError);
}

TEST_CASE("P6 flags the cyclic non-frame seed as tension") {
  const auto r = verify(PropositionId::P6, battery("P6"));
  REQUIRE(r.evidence["tension"].size() == 1);
  CHECK(r.evidence["tension"][0] == "shift_one_minus_z");
  CHECK(r.evidence["contradiction"].empty());
  CHECK(r.note.find("tension") != std::string::npos);
}

TEST_CASE("P1 skips an inner config symbol") {
  const auto r = verify(PropositionId::P1, make_config(MonomialSymbol{1}, {1.0}, 16, 16));
  CHECK(r.verdict == Verdict::consistent);
  CHECK_FALSE(r.evidence["cases"][0]["applicable"].get<bool>());
}

TEST_CASE("bounds_trend ladder") {
  const auto t = bounds_trend(ScaledShiftSymbol{0.5}, TruncatedSeries::from_coeffs({1.0}), 32);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].N == 8);
  CHECK(t.rows[1].N == 16);
  CHECK(t.rows[2].N == 32);
  CHECK(t.lower_vanishing);
  CHECK_FALSE(t.upper_blowup);

  const auto s = bounds_trend(MonomialSymbol{1}, TruncatedSeries::from_coeffs({1.0}), 32);
  CHECK_FALSE(s.lower_vanishing);
  CHECK_FALSE(s.upper_blowup);

  const auto g = bounds_trend(ConstantSymbol{1.5}, TruncatedSeries::from_coeffs({1.0}), 16);
  CHECK(g.upper_blowup);

  const auto tiny = bounds_trend(MonomialSymbol{1}, TruncatedSeries::from_coeffs({1.0}), 3);
  CHECK(tiny.rows.size() == 2);
}
