#include <iostream>
#include <vector>

#include "rauszer/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rauszer::run_cli(args, std::cout, std::cerr);
}
