#include <iostream>

#include "twmis/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return twmis::run_cli(args, std::cout, std::cerr);
}
