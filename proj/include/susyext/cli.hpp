#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace susyext {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_verification_failed = 1,
  exit_usage = 2,
  exit_io = 3,
  exit_convergence = 4,
};

/// Runs the tool on args (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace susyext
