#include <iostream>

#include "mnhd/cli.hpp"

int main(int argc, char** argv) {
  return mnhd::cli::run(argc, argv, std::cout, std::cerr);
}
