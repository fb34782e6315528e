#include <iostream>

#include "zmdeg/cli.hpp"

int main(int argc, char** argv) { return zmdeg::cli::run(argc, argv, std::cout, std::cerr); }
