#include "liecheck_cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return liecheck::cli::run_cli(argc, argv, std::cout, std::cerr); }
