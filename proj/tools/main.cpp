#include <iostream>
#include <string>
#include <vector>

#include "aspbd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return aspbd::run_cli(args, std::cout, std::cerr);
}
