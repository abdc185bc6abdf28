#include <iostream>

#include "morita/cli.hpp"

int main(int argc, char** argv) { return morita::run_cli(argc, argv, std::cout, std::cerr); }
