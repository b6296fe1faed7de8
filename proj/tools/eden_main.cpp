#include <iostream>

#include "eden/cli.hpp"

int main(int argc, char** argv) { return eden::run_cli(argc, argv, std::cout, std::cerr); }
