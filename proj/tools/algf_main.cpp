#include <iostream>
#include <string>
#include <vector>

#include "algf/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const algf::cli::CommandResult result = algf::cli::run_command(args);
  std::cout << result.output;
  std::cerr << result.diagnostics;
  return result.exit_code;
}
