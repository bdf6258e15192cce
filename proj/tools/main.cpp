#include <iostream>
#include <string>
#include <vector>

#include "balanced/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return balanced::cli::run(args, std::cout, std::cerr);
}
