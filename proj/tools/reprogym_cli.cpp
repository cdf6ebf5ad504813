#include <iostream>

#include "reprogym/cli/commands.hpp"

int main(int argc, char** argv) {
  return reprogym::cli::run_cli(argc, argv, std::cout, std::cerr);
}
