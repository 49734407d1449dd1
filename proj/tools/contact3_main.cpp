#include <iostream>
#include <string>
#include <vector>

#include "contact3/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return contact3::cli::run(args, std::cout, std::cerr);
}
