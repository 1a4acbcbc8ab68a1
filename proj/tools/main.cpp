#include <iostream>

#include "dz/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dz::run_cli(args, std::cout, std::cerr);
}
