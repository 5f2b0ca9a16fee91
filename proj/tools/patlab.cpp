#include <iostream>

#include "patlab/cli.hpp"

int main(int argc, char** argv) {
  return patlab::cli::run_cli(argc, argv, std::cout, std::cerr);
}
