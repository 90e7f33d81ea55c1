#include "tcalab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tcalab::cli::run(argc, argv, std::cout, std::cerr); }
