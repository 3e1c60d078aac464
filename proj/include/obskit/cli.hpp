#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace obskit {

/// Exit codes of the `obskit` command.
enum ExitCode : int { kHolds = 0, kFails = 1, kError = 2 };

/// Runs `obskit <check|normalize|oracle|info> <graph-file> ...` with
/// `args` excluding the program name.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace obskit
