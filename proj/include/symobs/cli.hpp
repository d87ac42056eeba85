#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symobs {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitCap = 3,
  kExitInconsistent = 4,
};

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symobs
