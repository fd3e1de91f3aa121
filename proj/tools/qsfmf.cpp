#include <iostream>

#include "qsfmf/cli.hpp"

int main(int argc, char** argv) {
  return qsfmf::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
