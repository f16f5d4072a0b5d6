#include <iostream>
#include <string>
#include <vector>

#include "eccaudit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eccaudit::cli_main(args, std::cout, std::cerr);
}
