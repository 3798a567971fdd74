#include <iostream>

#include "cohom/cli/cli.hpp"

int main(int argc, char** argv) { return cohom::run_cli(argc, argv, std::cout, std::cerr); }
