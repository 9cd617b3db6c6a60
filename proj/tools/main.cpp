#include <iostream>
#include <string>
#include <vector>

#include "spmet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spmet::cli_run(args, std::cout, std::cerr);
}
