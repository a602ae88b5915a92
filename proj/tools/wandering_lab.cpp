#include <iostream>
#include <string>
#include <vector>

#include "wandering/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wandering::run(args, std::cout, std::cerr);
}
