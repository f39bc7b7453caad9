#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return c2crystal::cli::run(argc, argv, std::cout, std::cerr); }
