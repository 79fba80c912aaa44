#include <iostream>
#include <string>
#include <vector>

#include "halgeo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = halgeo::execute(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
