#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace heegaard {

enum ExitCode : int { kHolds = 0, kFails = 1, kInvalid = 2 };

/// Runs one command line (argv[0] is the program name). Reports go to `out`,
/// diagnostics and usage to `err`. Returns 0 when the checked condition holds
/// or the command succeeded, 1 when it fails, 2 on invalid input.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace heegaard
