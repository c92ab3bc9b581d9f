#include <iostream>

#include "tautcoh/cli.hpp"

int main(int argc, char** argv) { return tautcoh::cli::run(argc, argv, std::cout, std::cerr); }
