#include <iostream>
#include <string>
#include <vector>

#include "snc/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return snc::run_cli(args, std::cout, std::cerr);
}
