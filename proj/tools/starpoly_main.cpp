#include "starpoly/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return starpoly::run_cli(args, std::cin, std::cout, std::cerr);
}
