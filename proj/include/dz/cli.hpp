#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dz {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitClaimFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dz
