#include "liesoliton/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return liesoliton::run_cli(argc, argv, std::cout, std::cerr);
}
