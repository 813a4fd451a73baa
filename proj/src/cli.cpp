#include "hardy/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "hardy/report_io.hpp"

namespace hardy {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string config_path;
  std::string out_path;
  std::string format;
  std::optional<std::size_t> truncation;
  std::optional<std::size_t> orbit_len;
  std::optional<std::size_t> grid;
  std::string proposition;
  std::string config_dir;
};

struct LoadedConfig {
  ExperimentConfig config;
  bool format_in_file = false;
};

LoadedConfig load(const Options& opt) {
  if (opt.config_path.empty()) throw ConfigError("--config is required");
  json j = read_json_file(opt.config_path);
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  if (opt.truncation) j["truncation_order"] = *opt.truncation;
  if (opt.orbit_len) j["orbit_length"] = *opt.orbit_len;
  if (opt.grid) j["boundary_grid"] = *opt.grid;
  LoadedConfig out;
  out.format_in_file = j.contains("output") && j["output"].is_object() && j["output"].contains("format");
  out.config = config_from_json(j);
  return out;
}

OutputFormat resolve_format(const Options& opt, const LoadedConfig& cfg, OutputFormat fallback) {
  if (opt.format == "json") return OutputFormat::json;
  if (opt.format == "csv") return OutputFormat::csv;
  return cfg.format_in_file ? cfg.config.output.format : fallback;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write " + path);
  file << text;
}

std::string out_path(const Options& opt, const LoadedConfig& cfg) {
  return opt.out_path.empty() ? cfg.config.output.path : opt.out_path;
}

Orbit config_orbit(const ExperimentConfig& c) {
  return orbit(realize(c.symbol, c.truncation_order), seed_series(c), c.orbit_length, c.truncation_order);
}

void require_json(OutputFormat f, const std::string& command) {
  if (f != OutputFormat::json) throw UsageError(command + " only supports --format json");
}

int cmd_orbit(const Options& opt, std::ostream& out) {
  const auto cfg = load(opt);
  const auto orb = config_orbit(cfg.config);
  const auto text = resolve_format(opt, cfg, OutputFormat::csv) == OutputFormat::csv ? orbit_csv(orb)
                                                                                      : dump_canonical(orbit_json(orb));
  emit(text, out_path(opt, cfg), out);
  return kExitOk;
}

int cmd_frame_bounds(const Options& opt, std::ostream& out) {
  const auto cfg = load(opt);
  require_json(resolve_format(opt, cfg, OutputFormat::json), "frame-bounds");
  const auto bounds = frame_bounds_estimate(frame_section(config_orbit(cfg.config)));
  emit(dump_canonical(to_json(bounds)), out_path(opt, cfg), out);
  return kExitOk;
}

int cmd_gram(const Options& opt, std::ostream& out) {
  const auto cfg = load(opt);
  require_json(resolve_format(opt, cfg, OutputFormat::json), "gram");
  emit(dump_canonical(gram_json(gram(config_orbit(cfg.config)))), out_path(opt, cfg), out);
  return kExitOk;
}

int cmd_innerness(const Options& opt, std::ostream& out) {
  const auto cfg = load(opt);
  require_json(resolve_format(opt, cfg, OutputFormat::json), "innerness");
  const auto& c = cfg.config;
  const auto sym = realize(c.symbol, c.truncation_order);
  const auto report =
      innerness_test(sym, BoundaryGrid(c.boundary_grid), {.use_series = false, .exact_tol = c.tolerances.inner_tol});
  emit(dump_canonical(to_json(report)), out_path(opt, cfg), out);
  return kExitOk;
}

int cmd_cyclicity(const Options& opt, std::ostream& out) {
  const auto cfg = load(opt);
  require_json(resolve_format(opt, cfg, OutputFormat::json), "cyclicity");
  const auto report = cyclicity_rank(config_orbit(cfg.config), cfg.config.tolerances.rank_tol);
  emit(dump_canonical(to_json(report)), out_path(opt, cfg), out);
  return kExitOk;
}

int exit_for(Verdict v) { return v == Verdict::inconsistent ? kExitInconsistent : kExitOk; }

int cmd_verify(const Options& opt, std::ostream& out) {
  const auto id = parse_proposition(opt.proposition);
  const auto cfg = load(opt);
  require_json(resolve_format(opt, cfg, OutputFormat::json), "verify");
  const auto report = verify(id, cfg.config);
  emit(dump_canonical(to_json(report)), out_path(opt, cfg), out);
  return exit_for(report.verdict);
}

// Each <id>.json in the directory configures the suite named by its stem.
int cmd_report_all(const Options& opt, std::ostream& out) {
  const fs::path dir(opt.config_dir);
  if (!fs::is_directory(dir)) throw UsageError("not a directory: " + opt.config_dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (files.empty()) throw UsageError("no *.json configs in " + opt.config_dir);

  std::vector<std::pair<PropositionId, fs::path>> jobs;
  for (const auto& p : files) jobs.emplace_back(parse_proposition(p.stem().string()), p);
  std::sort(jobs.begin(), jobs.end());

  const fs::path out_dir = opt.out_path;
  if (!out_dir.empty()) fs::create_directories(out_dir);

  json entries = json::array();
  json counts{{"consistent", 0}, {"inconsistent", 0}, {"inconclusive", 0}};
  int code = kExitOk;
  for (const auto& [id, path] : jobs) {
    Options per = opt;
    per.config_path = path.string();
    const auto report = verify(id, load(per).config);
    const std::string name = to_string(id) + ".json";
    if (!out_dir.empty()) emit(dump_canonical(to_json(report)), (out_dir / name).string(), out);
    entries.push_back({{"proposition", to_string(id)},
                       {"verdict", to_string(report.verdict)},
                       {"note", report.note},
                       {"config", path.filename().string()},
                       {"report", name}});
    counts[to_string(report.verdict)] = counts[to_string(report.verdict)].get<int>() + 1;
    code = std::max(code, exit_for(report.verdict));
  }
  const json index{{"reports", entries}, {"counts", counts}, {"exit_code", code}};
  const auto text = dump_canonical(index);
  if (!out_dir.empty()) emit(text, (out_dir / "index.json").string(), out);
  out << text;
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit frame experiments in the Hardy space H^2", "hardyframe"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--config", opt.config_path, "Experiment config (JSON)");
  app.add_option("--out", opt.out_path, "Output file, or output directory for report-all");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--truncation", opt.truncation, "Override truncation order N")->check(CLI::PositiveNumber);
  app.add_option("--orbit-len", opt.orbit_len, "Override orbit length K")->check(CLI::PositiveNumber);
  app.add_option("--grid", opt.grid, "Override boundary grid size M")->check(CLI::PositiveNumber);

  using Handler = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands{
      {app.add_subcommand("orbit", "Orbit norm profile (CSV by default)"), cmd_orbit},
      {app.add_subcommand("frame-bounds", "Finite-section frame bound estimates"), cmd_frame_bounds},
      {app.add_subcommand("gram", "Gram matrix and its spectrum"), cmd_gram},
      {app.add_subcommand("innerness", "Boundary innerness test of the symbol"), cmd_innerness},
      {app.add_subcommand("cyclicity", "Numerical rank of the orbit span"), cmd_cyclicity},
  };
  auto* verify_cmd = app.add_subcommand("verify", "Run one verification suite");
  verify_cmd->add_option("id", opt.proposition, "Proposition id")->required();
  commands.emplace_back(verify_cmd, cmd_verify);
  auto* report_cmd = app.add_subcommand("report-all", "Run every suite configured in a directory");
  report_cmd->add_option("dir", opt.config_dir, "Directory of <id>.json configs")->required();
  commands.emplace_back(report_cmd, cmd_report_all);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    for (const auto& [cmd, handler] : commands) {
      if (cmd->parsed()) return handler(opt, out);
    }
    err << "error: no subcommand\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace hardy
