#include <iostream>

#include "arrowpoly_cli/cli.hpp"

int main(int argc, char** argv) { return arrowpoly::cli::run(argc, argv, std::cout, std::cerr); }
