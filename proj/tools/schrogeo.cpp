#include <iostream>

#include "schrogeo/cli/runner.hpp"

int main(int argc, char** argv) { return schrogeo::cli::run_cli(argc, argv, std::cout, std::cerr); }
