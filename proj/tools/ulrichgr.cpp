#include "ugr/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ugr::run_cli(argc, argv, std::cout, std::cerr); }
