#include <iostream>

#include "alphadg/cli.hpp"

int main(int argc, char** argv) { return alphadg::cli::run(argc, argv, std::cout, std::cerr); }
