#include <iostream>
#include <string>
#include <vector>

#include "bsconf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.size() == 1 && (args[0] == "--help" || args[0] == "-h")) {
    std::cout << bsconf::cli::usage();
    return 0;
  }
  return bsconf::cli::run(args, std::cout, std::cerr);
}
