#include <iostream>
#include <string>
#include <vector>

#include "braidlift/cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return braidlift::run_cli(std::move(args), std::cout, std::cerr);
}
