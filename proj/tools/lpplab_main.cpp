#include <iostream>
#include <string>
#include <vector>

#include "lpplab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lpplab::run(args, std::cout, std::cerr);
}
