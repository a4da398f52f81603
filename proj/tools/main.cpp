#include <iostream>

#include "thv/cli.hpp"

int main(int argc, char** argv) { return thv::cli::run(argc, argv, std::cout, std::cerr); }
