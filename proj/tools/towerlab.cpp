#include <iostream>

#include "towerlab/cli/cli.hpp"

int main(int argc, char** argv) { return towerlab::cli::run_cli(argc, argv, std::cout, std::cerr); }
