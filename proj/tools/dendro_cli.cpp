#include <iostream>

#include "dendro/cli.hpp"

int main(int argc, char** argv) {
  return dendro::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
