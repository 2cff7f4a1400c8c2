#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solfour::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kBoundOrSuiteFailure = 2 };

/// Runs one command line (without the program name).  JSON goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solfour::cli
