#include <iostream>

#include "g2maps/cli.hpp"

int main(int argc, char** argv) { return g2maps::cli::run(argc, argv, std::cout, std::cerr); }
