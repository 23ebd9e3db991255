#include <iostream>

#include "rddi/cli/commands.hpp"

int main(int argc, char** argv) {
  return rddi::cli::main_entry(argc, argv, std::cout, std::cerr);
}
