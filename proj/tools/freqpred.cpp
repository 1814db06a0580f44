#include <iostream>
#include <string>
#include <vector>

#include "freqpred/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return freqpred::cli::run(args, std::cout, std::cerr);
}
