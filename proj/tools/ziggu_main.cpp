#include <iostream>

#include "ziggu/cli.hpp"

int main(int argc, char** argv) {
  return ziggu::cli::run(argc, argv, std::cout, std::cerr, std::cin);
}
