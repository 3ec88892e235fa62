#include <iostream>

#include "rootfan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rootfan::cli::run(args, std::cout, std::cerr);
}
