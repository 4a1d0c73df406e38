#include <iostream>

#include "norlund/cli.hpp"

int main(int argc, char** argv) { return norlund::cli::run(argc, argv, std::cout, std::cerr); }
