#include <iostream>

#include "ccount/cli.hpp"

int main(int argc, char** argv) { return ccount::run_cli(argc, argv, std::cout, std::cerr); }
