#pragma once

// Command dispatch for the hardyframe executable. Exit codes: 0 ok or
// consistent, 1 inconsistent verdict, 2 usage or config error, 3 numerical
// failure.

#include <ostream>
#include <string>
#include <vector>

namespace hardy {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// `args` excludes the program name. Reports go to `out` unless --out is given;
/// diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardy
