#include <iostream>
#include <string>
#include <vector>

#include "netshare/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return netshare::cli::dispatch(args, std::cout, std::cerr);
}
