#include <iostream>
#include <string>
#include <vector>

#include "sedwave/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sedwave::run_cli(args, std::cout, std::cerr);
}
