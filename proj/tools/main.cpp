#include <iostream>

#include "gpfield/cli.hpp"

int main(int argc, char** argv) { return gpf::run_cli(argc, argv, std::cout, std::cerr); }
