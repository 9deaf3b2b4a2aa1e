#include <iostream>
#include <string>
#include <vector>

#include "tclique/cli.hpp"

int main(int argc, char** argv) {
  return tclique::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
