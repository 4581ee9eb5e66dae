#include "symprod/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return symprod::run_cli(argc, argv, std::cout, std::cerr); }
