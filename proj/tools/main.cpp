#include <iostream>

#include "jordkit/cli.hpp"

int main(int argc, char** argv) {
  return jordkit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout);
}
