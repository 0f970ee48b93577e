#include <iostream>
#include <string>
#include <vector>

#include "tcg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tcg::run(args, std::cout, std::cerr);
}
