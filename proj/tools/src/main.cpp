#include <iostream>
#include <string>
#include <vector>

#include "uacg_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return uacg::cli::run_cli(args, std::cout, std::cerr);
}
