#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unitgraph {

enum ExitCode : int {
    exit_ok = 0,
    exit_theorem_failure = 1,
    exit_parse_error = 2,
    exit_realize_error = 3,
    exit_budget_exceeded = 4,
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unitgraph
