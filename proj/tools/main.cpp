#include <iostream>

#include "hyperarr/cli.hpp"

int main(int argc, char** argv) {
  return hyperarr::cli_main(argc, argv, std::cout, std::cerr);
}
