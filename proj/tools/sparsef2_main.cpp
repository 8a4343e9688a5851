#include <iostream>

#include "sparsef2/cli.hpp"

int main(int argc, char** argv) { return sparsef2::cli::main_entry(argc, argv, std::cout, std::cerr); }
