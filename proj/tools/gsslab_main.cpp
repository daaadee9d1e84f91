#include <iostream>
#include <string>
#include <vector>

#include "gsslab/cli.hpp"

int main(int argc, char** argv) {
  return gsslab::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
