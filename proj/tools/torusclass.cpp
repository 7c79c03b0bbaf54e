#include <iostream>

#include "torusclass/cli.hpp"

int main(int argc, char** argv) { return torusclass::run_cli(argc, argv, std::cout, std::cerr); }
