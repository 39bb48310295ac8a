#include <iostream>
#include <string>
#include <vector>

#include "rankext/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rankext::cli::run(args, std::cout, std::cerr);
}
