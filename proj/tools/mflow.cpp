#include <iostream>
#include <string>
#include <vector>

#include "mflow/harness/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mflow::harness::run_cli(args, std::cout, std::cerr);
}
