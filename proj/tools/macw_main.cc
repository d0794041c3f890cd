#include <iostream>

#include "macw/cli/commands.h"

int main(int argc, char** argv) {
  return macw::cli::run(argc, argv, std::cout, std::cerr);
}
