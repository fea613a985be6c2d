#include <iostream>

#include "depthcut/cli.hpp"

int main(int argc, char** argv) { return depthcut::run_cli(argc, argv, std::cout, std::cerr); }
