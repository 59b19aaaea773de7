#include <iostream>

#include "masi/cli.hpp"

int main(int argc, char** argv) { return masi::run_cli(argc, argv, std::cout, std::cerr); }
