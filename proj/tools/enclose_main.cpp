#include <iostream>

#include "enclose/cli.hpp"

int main(int argc, char** argv) {
  return enclose::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
