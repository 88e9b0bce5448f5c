#include <iostream>
#include <string>
#include <vector>

#include <sushkevich/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sushkevich::cli::run(args, std::cout, std::cerr);
}
