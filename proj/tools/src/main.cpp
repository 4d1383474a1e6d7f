#include <iostream>

#include "sptok/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sptok::cli::run(args, std::cout, std::cerr);
}
