#include <iostream>
#include <string>
#include <vector>

#include "bmsa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bmsa::run_cli(args, std::cout, std::cerr);
}
