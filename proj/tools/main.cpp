#include <iostream>

#include "quasicount/cli.hpp"

int main(int argc, char** argv) {
  return quasicount::cli::run(argc, argv, std::cout, std::cerr);
}
