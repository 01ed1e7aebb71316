#include <iostream>

#include "flagcurv/cli.hpp"

int main(int argc, char** argv) {
  return flagcurv::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
