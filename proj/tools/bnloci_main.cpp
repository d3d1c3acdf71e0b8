#include <iostream>

#include "bnloci/cli.hpp"

int main(int argc, char** argv) { return bnloci::run_cli(argc, argv, std::cout, std::cerr); }
