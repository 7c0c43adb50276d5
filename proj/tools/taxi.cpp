#include <iostream>
#include <string>
#include <vector>

#include "taxicab/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = taxicab::cli::run_command(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.status;
}
