#include <iostream>
#include <string>
#include <vector>

#include "sgp/cli.hpp"

int main(int argc, char** argv) {
  return sgp::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
