#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return nstep::cli::run_cli(argc, argv, std::cout, std::cerr); }
