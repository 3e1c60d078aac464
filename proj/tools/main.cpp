#include <iostream>
#include <string>
#include <vector>

#include "obskit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return obskit::runCli(args, std::cout, std::cerr);
}
