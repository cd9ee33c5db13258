#include <iostream>
#include <string>
#include <vector>

#include "qdpi/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return qdpi::cli::run(args, std::cout, std::cerr);
}
