#include <iostream>

#include "bloommst/cli.hpp"

int main(int argc, char** argv) { return bloommst::run_cli(argc, argv, std::cout, std::cerr); }
