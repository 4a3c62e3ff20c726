#include <iostream>

#include "causet/cli.hpp"

int main(int argc, char** argv) { return causet::cli::dispatch(argc, argv, std::cout, std::cerr); }
