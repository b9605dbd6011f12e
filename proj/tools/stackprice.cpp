#include <iostream>
#include <string>
#include <vector>

#include "stackprice/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return stackprice::cli::run(args, std::cout, std::cerr);
}
