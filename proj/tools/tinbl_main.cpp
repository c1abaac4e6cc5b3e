#include <iostream>

#include "tinbl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tinbl::cli::run(args, std::cout, std::cerr);
}
