#include <iostream>
#include <string>
#include <vector>

#include "bettipow/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bettipow::runCli(args, std::cout, std::cerr);
}
