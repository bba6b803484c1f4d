#pragma once

#include <ostream>
#include <span>
#include <string>

namespace pcs {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  exit_pass = 0,       // feasible / property holds / no certificate
  exit_fail = 1,       // infeasible / property fails / violation found
  exit_usage = 2,      // usage or input error
  exit_undecided = 3,  // exhaustive routine past its size bound
};

/// Runs one subcommand. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pcs
