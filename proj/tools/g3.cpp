#include <iostream>

#include "g3/cli.hpp"

int main(int argc, char** argv) { return g3::cli::run(argc, argv, std::cout, std::cerr); }
