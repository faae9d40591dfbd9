#include <iostream>
#include <string>
#include <vector>

#include "heegaard/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return heegaard::run_command(args, std::cout, std::cerr);
}
