#include <iostream>
#include <string>
#include <vector>

#include "graphent/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return graphent::cli::run(args, std::cout, std::cerr);
}
