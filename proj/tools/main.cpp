#include "commands.hpp"

#include <iostream>

int main(int argc, char **argv) { return artifact::cli::main_entry(argc, argv, std::cout, std::cerr); }
