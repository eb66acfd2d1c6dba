#include <iostream>

#include "synthminer/cli.hpp"

int main(int argc, char** argv) { return synthminer::run_cli(argc, argv, std::cout, std::cerr); }
