#include <iostream>
#include <string>
#include <vector>

#include "pcs/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return pcs::run(args, std::cout, std::cerr);
}
