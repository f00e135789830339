#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sheetpow {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; image bytes go to the --out file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sheetpow
