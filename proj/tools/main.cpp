#include <iostream>
#include <string>
#include <vector>

#include "nctorus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nct::run_cli(args, std::cout, std::cerr);
}
