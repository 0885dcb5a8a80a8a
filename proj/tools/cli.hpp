#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sheaf1d::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kMalformedInput = 2 };

// Runs one command. args excludes the program name. The JSON report goes to
// out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sheaf1d::cli
