#include "apland/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return apland::cli(argc, argv, std::cout, std::cerr); }
