#include <iostream>
#include <string>
#include <vector>

#include "gamma_ideal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gamma_ideal::cli::run(args, std::cout, std::cerr);
}
