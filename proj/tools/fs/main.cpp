#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return fs_cli::dispatch(argc, argv, std::cout, std::cerr);
}
