#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lpplab {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitRejected = 2;

/// Flat configuration file: either `key = value` lines (# comments) or a
/// single JSON object of scalars. Keys are long flag names without the
/// leading dashes. Throws ConfigError on malformed input.
std::vector<std::pair<std::string, std::string>> load_config_file(const std::string& path);

/// Entry point behind the `lpplab` binary. args[0] is the program name,
/// args[1] the subcommand. Records go to --out (or `out` when absent),
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpplab
