#include <iostream>

#include "semiid/cli.hpp"

int main(int argc, char** argv) {
  return semiid::run(argc, argv, std::cout, std::cerr);
}
