#include <iostream>

#include "repring_commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return repring::cli::run(args, std::cout, std::cerr);
}
