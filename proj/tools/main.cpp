#include <iostream>

#include "lagmon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lagmon::run_cli(args, std::cout, std::cerr);
}
