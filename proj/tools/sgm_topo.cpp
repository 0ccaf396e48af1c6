#include <iostream>

#include "sgmtopo/cli.hpp"

int main(int argc, char** argv) { return sgmtopo::cli::run(argc, argv, std::cout, std::cerr); }
