#include <iostream>

#include "burgess/cli.hpp"

int main(int argc, char** argv) { return burgess::run_cli(argc, argv, std::cout, std::cerr); }
