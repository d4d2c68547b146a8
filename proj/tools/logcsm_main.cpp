#include <iostream>
#include <string>
#include <vector>

#include "logcsm/scenario.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return logcsm::run_cli(args, std::cout, std::cerr);
}
