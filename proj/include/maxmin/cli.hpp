#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxmin {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitMalformedInput = 2,
  kExitPrecondition = 3,
};

/// Runs the CLI on `args` (args[0] is the program name). Results go to
/// `out`; errors are written to `err` as a one-line JSON object.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxmin
