#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asymean {

/// Exit codes of the command-line front end.
enum ExitCode { ExitOk = 0, ExitEngineError = 1, ExitUsageError = 2 };

/// Runs one command.  args excludes the program name.  Reports go to out,
/// diagnostics to err.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace asymean
