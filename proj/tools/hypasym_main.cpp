#include <iostream>
#include <string>
#include <vector>

#include "hypasym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hypasym::runCli(args, std::cout, std::cerr);
}
