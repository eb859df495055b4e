#include <iostream>
#include <string>
#include <vector>

#include "stasheff_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stasheff::cli::run(args, std::cout, std::cerr);
}
