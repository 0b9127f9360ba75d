#include <iostream>

#include "spreadres/cli.hpp"

int main(int argc, char** argv) { return spreadres::cli::run(argc, argv, std::cout, std::cerr); }
