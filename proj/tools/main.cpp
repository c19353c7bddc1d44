#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return climate_stress::cli::main(argc, argv, std::cout, std::cerr);
}
