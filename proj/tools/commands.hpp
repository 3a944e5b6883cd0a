#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ybmap::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kPreconditionViolation = 2,
  kVerificationFailure = 3,
};

/// Runs the `ybmap` command line. args[0] is the program name. Results go to
/// --out (or `out` when no file is given), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ybmap::cli
