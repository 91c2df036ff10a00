#include <iostream>

#include "slzeta/cli.hpp"

int main(int argc, char** argv) {
  return slzeta::cli::run(argc, argv, std::cout, std::cerr);
}
