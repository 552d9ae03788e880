#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace h2tea::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUserError = 2,
  kUndefined = 3,
};

// Runs one command. `args` excludes the program name. Primary output goes to
// `out`; diagnostics and the run manifest go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace h2tea::cli
