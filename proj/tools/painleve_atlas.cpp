#include <iostream>

#include "painleve/cli.hpp"

int main(int argc, char** argv) { return painleve::run_cli(argc, argv, std::cout, std::cerr); }
