#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polya::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDomain = 2,
    kTolerance = 3,
};

/// Parses `args` (without the program name), runs one subcommand and writes
/// its CSV to `out` (or to the --out file). Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest-safe decimal text: 17 significant digits, '.' separator,
/// independent of the global locale.
std::string format_double(double v);

} // namespace polya::cli
