#include <iostream>

#include "medlat/cli.hpp"

int main(int argc, char** argv) {
  return medlat::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
