#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hardy/cli.hpp"
#include "hardy/report_io.hpp"
#include "support/oracles.hpp"

using namespace hardy;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("hardyframe_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string write_config(const fs::path& dir, const std::string& name, const json& j) {
  const auto p = dir / name;
  std::ofstream(p) << j.dump(2);
  return p.string();
}

json base_config(const json& symbol, std::size_t N, std::size_t K) {
  return json{{"symbol", symbol},
              {"seed_coeffs", json::array({{{"re", 1.0}, {"im", 0.0}}})},
              {"truncation_order", N},
              {"orbit_length", K},
              {"boundary_grid", 4 * N + 4}};
}

json cplx(double re, double im = 0.0) { return json{{"re", re}, {"im", im}}; }

std::string battery_dir() { return std::string(HARDY_SOURCE_DIR) + "/configs/battery"; }

}  // namespace

TEST_CASE("config parsing and validation") {
  const auto good = base_config({{"kind", "monomial"}, {"m", 1}}, 8, 8);
  const auto c = config_from_json(good);
  CHECK(c.truncation_order == 8);
  CHECK(std::get<MonomialSymbol>(c.symbol).m == 1);
  CHECK(c.tolerances == Tolerances{});

  auto bad = good;
  bad["boundary_grid"] = 32;
  CHECK_THROWS_AS(config_from_json(bad), ConfigError);
  bad = good;
  bad["truncation_order"] = 0;
  CHECK_THROWS_AS(config_from_json(bad), ConfigError);
  bad = good;
  bad["orbit_length"] = 0;
  CHECK_THROWS_AS(config_from_json(bad), ConfigError);
  bad = good;
  bad["tolerances"] = {{"rank_tol", -1.0}};
  CHECK_THROWS_AS(config_from_json(bad), ConfigError);
  bad = good;
  bad.erase("symbol");
  CHECK_THROWS_AS(config_from_json(bad), ConfigError);
  bad = good;
  bad["symbol"] = {{"kind", "wavelet"}};
  CHECK_THROWS_AS(config_from_json(bad), ConfigError);
  bad = good;
  bad["seed_coeffs"] = json::array({"1+0i"});
  CHECK_THROWS_AS(config_from_json(bad), ConfigError);
  bad = good;
  bad["seed_coeffs"] = json::array();
  CHECK_THROWS_AS(config_from_json(bad), ConfigError);
  bad = good;
  bad["truncation_order"] = -3;
  CHECK_THROWS_AS(config_from_json(bad), ConfigError);
  bad = good;
  bad["output"] = {{"format", "xml"}};
  CHECK_THROWS_AS(config_from_json(bad), ConfigError);
  bad = good;
  bad["symbol"] = {{"kind", "blaschke"}, {"zeros", json::array({{{"a", cplx(1.0)}, {"multiplicity", 1}}})}};
  CHECK_THROWS_AS(config_from_json(bad), ConfigError);
}

TEST_CASE("load_config reports malformed and missing files") {
  const auto dir = scratch("load");
  std::ofstream(dir / "bad.json") << "{\"symbol\": ";
  CHECK_THROWS_AS(load_config(dir / "bad.json"), ConfigError);
  CHECK_THROWS_AS(load_config(dir / "missing.json"), ConfigError);
}

TEST_CASE("complex numbers serialize as re/im objects") {
  const auto j = complex_to_json(Complex{1.5, -2.0});
  CHECK(j == json{{"re", 1.5}, {"im", -2.0}});
  CHECK(complex_from_json(j) == Complex{1.5, -2.0});
  CHECK_THROWS_AS(complex_from_json(json("1.5")), ConfigError);
  CHECK_THROWS_AS(complex_from_json(json::array({1.0, 2.0})), ConfigError);
}

TEST_CASE("dump_canonical formatting") {
  const json j{{"b", 0.1}, {"a", json::array({1, 2.5})}, {"c", NAN}, {"d", "x"}, {"e", json::object()}};
  const auto s = dump_canonical(j);
  CHECK(s == "{\n  \"a\": [\n    1,\n    2.5\n  ],\n  \"b\": 0.10000000000000001,\n  \"c\": null,\n  \"d\": \"x\",\n  \"e\": {}\n}\n");
  CHECK(dump_canonical(json{{"z", -0.0}}) == "{\n  \"z\": 0\n}\n");
}

TEST_CASE("orbit CSV and JSON emission") {
  const auto o = orbit(realize(ConstantSymbol{0.5}, 2), TruncatedSeries::from_coeffs({1.0}), 3, 2);
  CHECK(orbit_csv(o) == "n,norm,truncated\n0,1,0\n1,0.5,0\n2,0.25,0\n3,0.125,0\n");
  const auto j = orbit_json(o);
  CHECK(j["rows"].size() == 4);
  CHECK(j["rows"][3]["norm"].get<double>() == 0.125);
}

TEST_CASE("gram JSON carries the spectrum") {
  const auto o = orbit(realize(MonomialSymbol{1}, 3), TruncatedSeries::from_coeffs({1.0}), 3, 3);
  const auto j = gram_json(gram(o));
  CHECK(j["size"] == 4);
  CHECK(j["eigenvalues"].size() == 4);
  CHECK(j["entries"][0][0]["re"].get<double>() == 1.0);
}

// --- round trips -------------------------------------------------------------

namespace {

SymbolSpec random_symbol(oracle::Rng& rng) {
  switch (rng.next() % 5) {
    case 0: return ConstantSymbol{rng.complex_unit_box()};
    case 1: return MonomialSymbol{oracle::random_size(rng, 0, 9)};
    case 2: return ScaledShiftSymbol{rng.complex_unit_box()};
    case 3: return PolynomialSymbol{oracle::random_coeffs(rng, oracle::random_size(rng, 0, 6))};
    default: {
      BlaschkeSymbol b;
      const std::size_t k = oracle::random_size(rng, 0, 3);
      for (std::size_t i = 0; i < k; ++i) b.zeros.push_back({std::polar(rng.uniform(0.0, 0.9), rng.uniform(0.0, 6.283)), oracle::random_size(rng, 1, 3)});
      b.prefactor = std::polar(1.0, rng.uniform(0.0, 6.283));
      b.scale = rng.complex_unit_box();
      return b;
    }
  }
}

bool same_symbol(const SymbolSpec& a, const SymbolSpec& b) { return to_json(a) == to_json(b); }

}  // namespace

TEST_CASE("property: symbol and config JSON round trips") {
  oracle::Rng rng(601);
  for (int t = 0; t < 100; ++t) {
    ExperimentConfig c;
    c.symbol = random_symbol(rng);
    c.seed_coeffs = oracle::random_coeffs(rng, oracle::random_size(rng, 0, 8));
    c.truncation_order = oracle::random_size(rng, 1, 64);
    c.orbit_length = oracle::random_size(rng, 1, 64);
    c.boundary_grid = 4 * c.truncation_order + 1 + oracle::random_size(rng, 0, 100);
    c.tolerances = {rng.uniform(1e-12, 1e-6), rng.uniform(1e-12, 1e-6), rng.uniform(1e-14, 1e-10)};
    c.output = {t % 2 ? OutputFormat::csv : OutputFormat::json, t % 3 ? "" : "out.json"};
    // Through text, as a file would be.
    const auto back = config_from_json(json::parse(dump_canonical(to_json(c))));
    CHECK(same_symbol(back.symbol, c.symbol));
    CHECK(back.seed_coeffs == c.seed_coeffs);
    CHECK(back.truncation_order == c.truncation_order);
    CHECK(back.orbit_length == c.orbit_length);
    CHECK(back.boundary_grid == c.boundary_grid);
    CHECK(back.tolerances == c.tolerances);
    CHECK(back.output == c.output);
  }
}

TEST_CASE("property: frame bounds and innerness JSON round trips") {
  oracle::Rng rng(602);
  for (int t = 0; t < 100; ++t) {
    const FrameBounds b{rng.uniform(0.0, 1.0), rng.uniform(1.0, 1e6), oracle::random_size(rng, 1, 256), oracle::random_size(rng, 1, 256), t % 2 == 0, t % 3 == 0};
    CHECK(bounds_from_json(json::parse(dump_canonical(to_json(b)))) == b);

    InnernessReport r;
    r.max_deviation = rng.uniform(0.0, 1.0);
    r.sub_unit_fraction = rng.uniform(0.0, 1.0);
    r.verdict = static_cast<InnernessVerdict>(t % 3);
    r.tolerance = rng.uniform(1e-12, 1e-6);
    r.grid_size = oracle::random_size(rng, 1, 4096);
    r.used_series = t % 2 == 1;
    const auto back = innerness_from_json(json::parse(dump_canonical(to_json(r))));
    CHECK(back.max_deviation == r.max_deviation);
    CHECK(back.sub_unit_fraction == r.sub_unit_fraction);
    CHECK(back.verdict == r.verdict);
    CHECK(back.tolerance == r.tolerance);
    CHECK(back.grid_size == r.grid_size);
    CHECK(back.used_series == r.used_series);
  }
}

TEST_CASE("verification reports round-trip and serialize deterministically") {
  for (const auto id : all_propositions()) {
    const auto cfg = load_config(battery_dir() + "/" + to_string(id) + ".json");
    const auto r = verify(id, cfg);
    const auto text = dump_canonical(to_json(r));
    const auto back = report_from_json(json::parse(text));
    CHECK(back.proposition == r.proposition);
    CHECK(back.verdict == r.verdict);
    CHECK(back.note == r.note);
    CHECK(back.parameters == r.parameters);
    // Evidence compares after one canonical pass: non-finite doubles become null.
    CHECK(dump_canonical(back.evidence) == dump_canonical(r.evidence));
    CHECK(dump_canonical(to_json(back)) == text);
    CHECK(dump_canonical(to_json(verify(id, cfg))) == text);
  }
}

// --- command dispatch --------------------------------------------------------

TEST_CASE("cli orbit") {
  const auto dir = scratch("orbit");
  const auto shift = write_config(dir, "shift.json", base_config({{"kind", "monomial"}, {"m", 1}}, 8, 8));
  const auto r = run({"orbit", "--config", shift});
  CHECK(r.code == 0);
  CHECK(r.out == "n,norm,truncated\n0,1,0\n1,1,0\n2,1,0\n3,1,0\n4,1,0\n5,1,0\n6,1,0\n7,1,0\n8,1,0\n");

  const auto half = write_config(dir, "half.json", base_config({{"kind", "constant"}, {"c", cplx(0.5)}}, 2, 5));
  const auto h = run({"orbit", "--config", half});
  std::istringstream lines(h.out);
  std::string line;
  std::getline(lines, line);
  for (int n = 0; std::getline(lines, line); ++n) {
    const auto first = line.find(','), second = line.rfind(',');
    CHECK(std::stod(line.substr(first + 1, second - first - 1)) == std::ldexp(1.0, -n));
  }

  const auto js = run({"orbit", "--config", shift, "--format", "json", "--orbit-len", "3"});
  CHECK(js.code == 0);
  CHECK(json::parse(js.out)["rows"].size() == 4);

  const auto out_file = (dir / "orbit.csv").string();
  CHECK(run({"--config", shift, "orbit", "--out", out_file}).code == 0);
  std::ifstream in(out_file);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,norm,truncated");
}

TEST_CASE("cli errors map to exit code 2") {
  const auto dir = scratch("errors");
  std::ofstream(dir / "bad.json") << "{not json";
  const auto bad = run({"orbit", "--config", (dir / "bad.json").string()});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());

  const auto cfg = write_config(dir, "ok.json", base_config({{"kind", "monomial"}, {"m", 1}}, 8, 8));
  CHECK(run({"verify", "bogus_id", "--config", cfg}).code == 2);
  CHECK(run({"orbit"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"orbit", "--config", cfg, "--format", "xml"}).code == 2);
  CHECK(run({"orbit", "--config", cfg, "--grid", "16"}).code == 2);
  CHECK(run({"frame-bounds", "--config", cfg, "--format", "csv"}).code == 2);
  CHECK(run({"verify", "P2", "--config", cfg}).code == 2);
  CHECK(run({"report-all", scratch("empty").string()}).code == 2);
  CHECK(run({"report-all", (dir / "nope").string()}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli frame-bounds examples") {
  const auto dir = scratch("bounds");
  const auto shift = write_config(dir, "shift.json", base_config({{"kind", "monomial"}, {"m", 1}}, 16, 16));
  const auto a = json::parse(run({"frame-bounds", "--config", shift}).out);
  CHECK(a["A_est"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a["B_est"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a["tight"].get<bool>());

  const auto sq = write_config(dir, "sq.json", base_config({{"kind", "monomial"}, {"m", 2}}, 16, 16));
  CHECK(json::parse(run({"frame-bounds", "--config", sq}).out)["A_est"].get<double>() < 1e-12);

  const auto half = write_config(dir, "half.json", base_config({{"kind", "scaled_shift"}, {"c", cplx(0.5)}}, 10, 10));
  const auto h = json::parse(run({"frame-bounds", "--config", half}).out);
  CHECK(std::abs(h["A_est"].get<double>() - std::pow(4.0, -10.0)) < 1e-15);
}

TEST_CASE("cli gram, innerness and cyclicity") {
  const auto dir = scratch("misc");
  const auto sq = write_config(dir, "sq.json", base_config({{"kind", "monomial"}, {"m", 2}}, 8, 8));
  const auto g = run({"gram", "--config", sq});
  CHECK(g.code == 0);
  CHECK(json::parse(g.out)["size"] == 9);
  const auto i = run({"innerness", "--config", sq});
  CHECK(json::parse(i.out)["verdict"] == "inner");
  const auto c = run({"cyclicity", "--config", sq});
  CHECK(json::parse(c.out)["span_dimension_deficit"] == 4);
}

TEST_CASE("cli verify exit codes") {
  const auto p3 = run({"verify", "P3", "--config", battery_dir() + "/P3.json"});
  CHECK(p3.code == 0);
  CHECK(json::parse(p3.out)["verdict"] == "consistent");
  const auto ex = run({"verify", "Ex_3_1", "--config", battery_dir() + "/Ex_3_1.json"});
  CHECK(ex.code == 0);
  CHECK(json::parse(ex.out)["evidence"]["unit_seed_bounds"]["A_est"].get<double>() == doctest::Approx(1.0));
  const auto p6 = run({"verify", "P6", "--config", battery_dir() + "/P6.json"});
  CHECK(p6.code == 0);
  CHECK(json::parse(p6.out)["verdict"] == "inconclusive");
}

TEST_CASE("cli report-all writes reports and index") {
  const auto out = scratch("report");
  const auto r = run({"report-all", battery_dir(), "--out", out.string()});
  CHECK(r.code == 0);
  const auto index = json::parse(r.out);
  CHECK(index["reports"].size() == 9);
  CHECK(index["counts"]["consistent"] == 8);
  CHECK(index["counts"]["inconclusive"] == 1);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(out)) files += e.path().extension() == ".json";
  CHECK(files == 10);
  for (const auto& e : index["reports"]) {
    if (e["proposition"] == "P6") {
      CHECK(e["verdict"] == "inconclusive");
      CHECK(e["note"].get<std::string>().find("tension") != std::string::npos);
    }
  }
  // Determinism across runs.
  CHECK(run({"report-all", battery_dir()}).out == r.out);
}

TEST_CASE("cli report-all rejects configs with unknown stems") {
  const auto dir = scratch("stems");
  write_config(dir, "P9.json", base_config({{"kind", "monomial"}, {"m", 1}}, 8, 8));
  CHECK(run({"report-all", dir.string()}).code == 2);
}

TEST_CASE("cli verify returns 1 for an inconsistent verdict") {
  // At eig_tol = 1e-20 the rounding-level A_est of the z - 1/2 seed no longer
  // counts as zero, so the kernel-witness suite reports a failed inequality.
  const auto dir = scratch("inconsistent");
  auto cfg = read_json_file(battery_dir() + "/P4ii.json");
  cfg["tolerances"]["eig_tol"] = 1e-20;
  const auto path = write_config(dir, "P4ii.json", cfg);
  const auto r = run({"verify", "P4ii", "--config", path});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["verdict"] == "inconsistent");
  CHECK(run({"report-all", dir.string()}).code == 1);
}
