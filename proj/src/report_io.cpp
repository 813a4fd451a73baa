#include "hardy/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hardy {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t get_count(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError(std::string("config: '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

void dump_number(std::ostringstream& os, double x) {
  if (!std::isfinite(x)) {
    os << "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);  // no signed zero
  os << buf;
}

void dump_value(std::ostringstream& os, const json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << json(it.key()).dump() << ": ";
        dump_value(os, it.value(), depth + 1);
      }
      os << "\n" << close << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        dump_value(os, j[i], depth + 1);
      }
      os << "\n" << close << "]";
      return;
    }
    case json::value_t::number_float:
      dump_number(os, j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw ConfigError("config: output format must be 'json' or 'csv'");
}

}  // namespace

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j.at("re").is_number() ||
      !j.at("im").is_number()) {
    throw ConfigError("complex numbers must be objects {\"re\": x, \"im\": y}");
  }
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

json coeffs_to_json(std::span<const Complex> coeffs) {
  json out = json::array();
  for (const auto& c : coeffs) out.push_back(complex_to_json(c));
  return out;
}

std::vector<Complex> coeffs_from_json(const json& j) {
  if (!j.is_array()) throw ConfigError("coefficient list must be an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& c : j) out.push_back(complex_from_json(c));
  return out;
}

json to_json(const SymbolSpec& spec) {
  json out = std::visit(
      overloaded{
          [](const ConstantSymbol& s) { return json{{"c", complex_to_json(s.c)}}; },
          [](const MonomialSymbol& s) { return json{{"m", s.m}}; },
          [](const ScaledShiftSymbol& s) { return json{{"c", complex_to_json(s.c)}}; },
          [](const PolynomialSymbol& s) { return json{{"coeffs", coeffs_to_json(s.coeffs)}}; },
          [](const BlaschkeSymbol& s) {
            json zeros = json::array();
            for (const auto& z : s.zeros) zeros.push_back({{"a", complex_to_json(z.a)}, {"multiplicity", z.multiplicity}});
            return json{{"zeros", zeros},
                        {"prefactor", complex_to_json(s.prefactor)},
                        {"scale", complex_to_json(s.scale)}};
          },
      },
      spec);
  out["kind"] = kind_name(spec);
  return out;
}

SymbolSpec symbol_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ConfigError("symbol: missing string field 'kind'");
  }
  const auto kind = j.at("kind").get<std::string>();
  try {
    if (kind == "constant") return ConstantSymbol{complex_from_json(j.at("c"))};
    if (kind == "monomial") return MonomialSymbol{get_count(j, "m")};
    if (kind == "scaled_shift") return ScaledShiftSymbol{complex_from_json(j.at("c"))};
    if (kind == "polynomial") return PolynomialSymbol{coeffs_from_json(j.at("coeffs"))};
    if (kind == "blaschke") {
      BlaschkeSymbol b;
      for (const auto& z : j.at("zeros")) {
        BlaschkeZero zero{complex_from_json(z.at("a")), 1};
        if (z.contains("multiplicity")) zero.multiplicity = get_count(z, "multiplicity");
        b.zeros.push_back(zero);
      }
      if (j.contains("prefactor")) b.prefactor = complex_from_json(j.at("prefactor"));
      if (j.contains("scale")) b.scale = complex_from_json(j.at("scale"));
      return b;
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("symbol: ") + e.what());
  }
  throw ConfigError("symbol: unknown kind '" + kind + "'");
}

json to_json(const ExperimentConfig& config) {
  return json{
      {"symbol", to_json(config.symbol)},
      {"seed_coeffs", coeffs_to_json(config.seed_coeffs)},
      {"truncation_order", config.truncation_order},
      {"orbit_length", config.orbit_length},
      {"boundary_grid", config.boundary_grid},
      {"tolerances",
       {{"inner_tol", config.tolerances.inner_tol},
        {"rank_tol", config.tolerances.rank_tol},
        {"eig_tol", config.tolerances.eig_tol}}},
      {"output",
       {{"format", config.output.format == OutputFormat::csv ? "csv" : "json"}, {"path", config.output.path}}},
  };
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  ExperimentConfig config;
  try {
    config.symbol = symbol_from_json(j.at("symbol"));
    config.seed_coeffs = coeffs_from_json(j.at("seed_coeffs"));
    config.truncation_order = get_count(j, "truncation_order");
    config.orbit_length = get_count(j, "orbit_length");
    config.boundary_grid = get_count(j, "boundary_grid");
    if (j.contains("tolerances")) {
      const auto& t = j.at("tolerances");
      if (t.contains("inner_tol")) config.tolerances.inner_tol = t.at("inner_tol").get<double>();
      if (t.contains("rank_tol")) config.tolerances.rank_tol = t.at("rank_tol").get<double>();
      if (t.contains("eig_tol")) config.tolerances.eig_tol = t.at("eig_tol").get<double>();
    }
    if (j.contains("output")) {
      const auto& o = j.at("output");
      if (o.contains("format")) config.output.format = parse_format(o.at("format").get<std::string>());
      if (o.contains("path")) config.output.path = o.at("path").get<std::string>();
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  validate(config);
  return config;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config: malformed JSON in " + path.string() + ": " + e.what());
  }
}

ExperimentConfig load_config(const std::filesystem::path& path) { return config_from_json(read_json_file(path)); }

json to_json(const FrameBounds& b) {
  return json{{"N", b.N},         {"K", b.K},         {"A_est", b.A_est},
              {"B_est", b.B_est}, {"tight", b.tight}, {"numerically_zero_lower", b.numerically_zero_lower}};
}

FrameBounds bounds_from_json(const json& j) {
  FrameBounds b;
  b.N = j.at("N").get<std::size_t>();
  b.K = j.at("K").get<std::size_t>();
  b.A_est = j.at("A_est").get<double>();
  b.B_est = j.at("B_est").get<double>();
  b.tight = j.at("tight").get<bool>();
  b.numerically_zero_lower = j.at("numerically_zero_lower").get<bool>();
  return b;
}

json to_json(const InnernessReport& r) {
  return json{{"max_deviation", r.max_deviation},
              {"sub_unit_fraction", r.sub_unit_fraction},
              {"verdict", to_string(r.verdict)},
              {"tolerance", r.tolerance},
              {"grid_size", r.grid_size},
              {"used_series", r.used_series}};
}

InnernessReport innerness_from_json(const json& j) {
  InnernessReport r;
  r.max_deviation = j.at("max_deviation").get<double>();
  r.sub_unit_fraction = j.at("sub_unit_fraction").get<double>();
  const auto v = j.at("verdict").get<std::string>();
  r.verdict = v == "inner" ? InnernessVerdict::inner
              : v == "non_inner" ? InnernessVerdict::non_inner
                                 : InnernessVerdict::inconclusive;
  r.tolerance = j.at("tolerance").get<double>();
  r.grid_size = j.at("grid_size").get<std::size_t>();
  r.used_series = j.at("used_series").get<bool>();
  return r;
}

json to_json(const DecayReport& r) {
  return json{{"classification", to_string(r.classification)},
              {"rate_estimate", r.rate_estimate},
              {"slope", r.slope},
              {"fit_begin", r.fit_begin},
              {"fit_end", r.fit_end},
              {"used_truncated_elements", r.used_truncated_elements}};
}

json to_json(const CyclicityReport& r) {
  json out{{"rank", r.rank},
           {"span_dimension_deficit", r.span_dimension_deficit},
           {"singular_values", r.singular_values},
           {"rank_tol", r.rank_tol}};
  out["orthogonal_complement_witness"] =
      r.orthogonal_complement_witness ? coeffs_to_json(r.orthogonal_complement_witness->coeffs()) : json(nullptr);
  return out;
}

json to_json(const ImageDiagnostics& r) {
  return json{{"min_modulus", r.min_modulus}, {"max_modulus", r.max_modulus}, {"intersects_T", r.intersects_T}};
}

json to_json(const DiskZeros& z) {
  return json{{"degree", z.degree},
              {"inside", coeffs_to_json(z.inside)},
              {"boundary_ambiguous", coeffs_to_json(z.boundary_ambiguous)}};
}

json to_json(const BoundsTrend& t) {
  json rows = json::array();
  for (const auto& b : t.rows) rows.push_back(to_json(b));
  return json{{"rows", rows},
              {"lower_exponent", t.lower_exponent},
              {"upper_exponent", t.upper_exponent},
              {"lower_vanishing", t.lower_vanishing},
              {"upper_blowup", t.upper_blowup}};
}

json to_json(const VerificationParameters& p) {
  return json{{"N", p.N},
              {"K", p.K},
              {"M", p.M},
              {"tolerances",
               {{"inner_tol", p.tolerances.inner_tol},
                {"rank_tol", p.tolerances.rank_tol},
                {"eig_tol", p.tolerances.eig_tol}}}};
}

json to_json(const VerificationReport& r) {
  return json{{"proposition", to_string(r.proposition)},
              {"verdict", to_string(r.verdict)},
              {"evidence", r.evidence},
              {"parameters", to_json(r.parameters)},
              {"note", r.note}};
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.proposition = parse_proposition(j.at("proposition").get<std::string>());
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.evidence = j.at("evidence");
  const auto& p = j.at("parameters");
  r.parameters.N = p.at("N").get<std::size_t>();
  r.parameters.K = p.at("K").get<std::size_t>();
  r.parameters.M = p.at("M").get<std::size_t>();
  const auto& t = p.at("tolerances");
  r.parameters.tolerances.inner_tol = t.at("inner_tol").get<double>();
  r.parameters.tolerances.rank_tol = t.at("rank_tol").get<double>();
  r.parameters.tolerances.eig_tol = t.at("eig_tol").get<double>();
  r.note = j.at("note").get<std::string>();
  return r;
}

std::string dump_canonical(const json& j) {
  std::ostringstream os;
  dump_value(os, j, 0);
  os << "\n";
  return os.str();
}

std::string orbit_csv(const Orbit& orb) {
  std::ostringstream os;
  os << "n,norm,truncated\n";
  char buf[40];
  for (std::size_t n = 0; n < orb.length(); ++n) {
    std::snprintf(buf, sizeof buf, "%.17g", orb.norms[n]);
    os << n << ',' << buf << ',' << (orb.truncated[n] ? 1 : 0) << '\n';
  }
  return os.str();
}

json orbit_json(const Orbit& orb) {
  json rows = json::array();
  for (std::size_t n = 0; n < orb.length(); ++n) {
    rows.push_back({{"n", n}, {"norm", orb.norms[n]}, {"truncated", static_cast<bool>(orb.truncated[n])}});
  }
  return json{{"N", orb.order}, {"K", orb.length() - 1}, {"rows", rows}};
}

json gram_json(const GramMatrix& g) {
  json rows = json::array();
  for (Eigen::Index m = 0; m < g.entries.rows(); ++m) {
    json row = json::array();
    for (Eigen::Index n = 0; n < g.entries.cols(); ++n) row.push_back(complex_to_json(g.entries(m, n)));
    rows.push_back(row);
  }
  const Eigen::VectorXd ev = hermitian_eigenvalues(g.entries);
  return json{{"size", g.entries.rows()},
              {"entries", rows},
              {"eigenvalues", std::vector<double>(ev.data(), ev.data() + ev.size())}};
}

}  // namespace hardy
