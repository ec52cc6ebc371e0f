#include "wonder/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return wonder::run_cli(argc, argv, std::cout, std::cerr); }
