#include <iostream>

#include "hhwb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hhwb::cli::run(args, std::cout, std::cerr);
}
