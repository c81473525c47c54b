#include <iostream>
#include <string>
#include <vector>

#include "geodiff/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return geodiff::cli::main_entry(args, std::cerr, std::cout);
}
