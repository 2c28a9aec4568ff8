#include <iostream>

#include "mogp/cli.hpp"

int main(int argc, char** argv) { return mogp::cli::main(argc, argv, std::cout, std::cerr); }
