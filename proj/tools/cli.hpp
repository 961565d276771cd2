#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tubefold::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kInternal = 3 };

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tubefold::cli
