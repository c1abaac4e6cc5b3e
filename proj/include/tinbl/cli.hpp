#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tinbl::cli {

enum ExitCode : int {
  kPass = 0,
  kCheckFailure = 1,
  kUsageError = 2,
};

/// Runs one command line. `args[0]` is the program name. Reports go to `out`
/// (or to the --out file), diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tinbl::cli
