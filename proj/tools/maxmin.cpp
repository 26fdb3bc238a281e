#include <iostream>
#include <string>
#include <vector>

#include "maxmin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return maxmin::run_cli(args, std::cout, std::cerr);
}
