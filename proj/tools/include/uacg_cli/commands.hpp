#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uacg::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_verification = 2,
  exit_budget = 3,
};

// Runs one `uacg` invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uacg::cli
