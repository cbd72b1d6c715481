#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace horizon::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kNumericalDomain = 3,
  kUnwritable = 4,
};

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` (unless --out is given) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace horizon::cli
