#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace uavsim {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

/// Entry point of the `uavsim` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace uavsim
