#include <iostream>

#include "zonotile/cli.hpp"

int main(int argc, char** argv) {
  return zonotile::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
