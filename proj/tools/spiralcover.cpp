#include <iostream>
#include <string>
#include <vector>

#include "spiralcover/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spiralcover::run_cli(args, std::cout, std::cerr);
}
