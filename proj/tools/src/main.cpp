#include <iostream>

#include "sumsq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sumsq::run(args, std::cout, std::cerr);
}
