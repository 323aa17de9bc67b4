#include <iostream>

#include "spinholo/reports.hpp"

int main(int argc, char** argv) {
  return spinholo::reports::run_cli(argc, argv, std::cout, std::cerr);
}
