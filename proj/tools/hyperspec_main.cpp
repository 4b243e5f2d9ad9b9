#include <iostream>
#include <string>
#include <vector>

#include "hyperspec/cli.hpp"

int main(int argc, char** argv) {
  return hyperspec::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
