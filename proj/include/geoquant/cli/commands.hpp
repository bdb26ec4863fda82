#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geoquant::cli {

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Reports go to `out`; diagnostics in text mode go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geoquant::cli
