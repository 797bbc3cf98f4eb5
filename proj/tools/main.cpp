#include <iostream>

#include "ghl/cli.hpp"

int main(int argc, char** argv) { return ghl::run_cli(argc, argv, std::cout, std::cerr); }
