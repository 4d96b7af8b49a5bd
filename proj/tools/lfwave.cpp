#include <iostream>

#include "lfwave/cli.hpp"

int main(int argc, char** argv) { return lfw::cli::main_entry(argc, argv, std::cout, std::cerr); }
