#include <iostream>

#include "extalg/cli.hpp"

int main(int argc, char** argv) {
  return extalg::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
