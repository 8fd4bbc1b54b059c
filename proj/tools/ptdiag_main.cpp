#include <iostream>

#include "ptdiag/cli.hpp"

int main(int argc, char** argv) { return ptdiag::run_cli(argc, argv, std::cout, std::cerr); }
