#include <iostream>
#include <string>
#include <vector>

#include "thetamix/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return thetamix::cli::parse_and_dispatch(args, std::cout, std::cerr);
}
