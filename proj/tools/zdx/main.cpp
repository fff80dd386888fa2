#include <iostream>

#include "zdx/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zdx::cli::run(args, std::cout, std::cerr);
}
