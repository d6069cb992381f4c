#include <iostream>
#include <string>
#include <vector>

#include "simpcat/clirun.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return simpcat::run_command(args, std::cout, std::cerr);
}
