#include <iostream>
#include <string>
#include <vector>

#include "splitov/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return splitov::cli::run_cli(args, std::cout, std::cerr);
}
