#include <iostream>

#include "toricss/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return toricss::cli::run(args, std::cout, std::cerr);
}
