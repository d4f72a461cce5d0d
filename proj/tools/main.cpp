#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  return bigm1::cli::run(argc, argv, std::cout, std::cerr);
}
