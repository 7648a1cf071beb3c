#include <iostream>
#include <string>
#include <vector>

#include "hstar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hstar::run_command(std::move(args), std::cout, std::cerr);
}
