#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tlie {

// Exit statuses of run_command.
enum ExitCode : int {
    kExitOk = 0,
    kExitMathFailure = 1,  // failed check, refuted certificate, non-member
    kExitUsage = 2,        // bad arguments, unreadable or invalid input
    kExitBounds = 3,       // bounds too small to decide
};

// Runs one invocation; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tlie
