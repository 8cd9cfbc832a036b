#include <iostream>

#include "qkzlab/cli.hpp"

int main(int argc, char** argv) { return qkzlab::cli::run(argc, argv, std::cout, std::cerr); }
