#include <iostream>

#include "ginlab/cli.hpp"

int main(int argc, char** argv) { return ginlab::run_cli(argc, argv, std::cout, std::cerr); }
