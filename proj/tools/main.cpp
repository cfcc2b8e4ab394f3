#include <iostream>

#include "smarand/cli.hpp"

int main(int argc, char** argv) { return smarand::cli::run(argc, argv, std::cout, std::cerr); }
