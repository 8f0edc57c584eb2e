#include <iostream>
#include <string>
#include <vector>

#include "mergegram/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mergegram::run_cli(args, std::cout, std::cerr);
}
