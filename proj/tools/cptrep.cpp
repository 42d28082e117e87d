#include <iostream>
#include <string>
#include <vector>

#include <cptrep/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cptrep::run_cli(args, std::cout, std::cerr);
}
