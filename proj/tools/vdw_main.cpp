#include <iostream>

#include "vdw/cli/cli.hpp"

int main(int argc, char** argv) {
  return vdw::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
