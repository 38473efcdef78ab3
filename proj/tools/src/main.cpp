#include "schurweyl/cli/commands.hpp"

#include <iostream>

int main(int argc, char **argv) { return schurweyl::cli::run(argc, argv, std::cout, std::cerr); }
