#include <iostream>

#include "puiseux_tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return puiseux::tools::run_cli(args, std::cin, std::cout, std::cerr);
}
