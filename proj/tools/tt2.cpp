#include <iostream>

#include "tt2/cli.hpp"

int main(int argc, char** argv) { return tt2::cli::run(argc, argv, std::cout, std::cerr); }
