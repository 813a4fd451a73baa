#pragma once

// JSON and CSV serialization. Complex numbers are always {"re": x, "im": y}.
// dump_canonical sorts keys and prints doubles with 17 significant digits, so
// identical inputs produce byte-identical output.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hardy/config.hpp"
#include "hardy/diagnostics.hpp"
#include "hardy/frame.hpp"
#include "hardy/orbit.hpp"
#include "hardy/symbols.hpp"
#include "hardy/verify.hpp"

namespace hardy {

using nlohmann::json;

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);
json coeffs_to_json(std::span<const Complex> coeffs);
std::vector<Complex> coeffs_from_json(const json& j);

json to_json(const SymbolSpec& spec);
SymbolSpec symbol_from_json(const json& j);

json to_json(const ExperimentConfig& config);
/// Throws ConfigError on missing or mistyped fields and on invariant violations.
ExperimentConfig config_from_json(const json& j);
/// Parses a JSON file; unreadable or malformed input raises ConfigError.
json read_json_file(const std::filesystem::path& path);
/// Reads and parses a config file; malformed JSON raises ConfigError.
ExperimentConfig load_config(const std::filesystem::path& path);

json to_json(const FrameBounds& b);
FrameBounds bounds_from_json(const json& j);

json to_json(const InnernessReport& r);
InnernessReport innerness_from_json(const json& j);

json to_json(const DecayReport& r);
json to_json(const CyclicityReport& r);
json to_json(const ImageDiagnostics& r);
json to_json(const DiskZeros& z);
json to_json(const BoundsTrend& t);

json to_json(const VerificationParameters& p);
json to_json(const VerificationReport& r);
VerificationReport report_from_json(const json& j);

std::string dump_canonical(const json& j);

/// Header "n,norm,truncated", one row per orbit element, LF line endings.
std::string orbit_csv(const Orbit& orb);
json orbit_json(const Orbit& orb);

json gram_json(const GramMatrix& g);

}  // namespace hardy
