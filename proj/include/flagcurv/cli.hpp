#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flagcurv {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kUsage = 2,             // unknown flag, malformed sign string
  kUnsupportedSummands = 3,
};

/// Runs `flagcurv <verb> ...`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagcurv
