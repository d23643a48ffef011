#include "merton/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return merton::cli::run_cli(argc, argv, std::cout, std::cerr); }
