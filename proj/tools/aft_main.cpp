#include <iostream>

#include "aft/cli.hpp"

int main(int argc, char** argv) { return aft::cli::main(argc, argv, std::cin, std::cout, std::cerr); }
