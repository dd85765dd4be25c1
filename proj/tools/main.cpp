#include <iostream>
#include <string>
#include <vector>

#include "char2forms/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return char2forms::run_cli(args, std::cout, std::cerr);
}
