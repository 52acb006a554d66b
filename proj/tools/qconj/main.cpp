#include <iostream>

#include "qconj/cli.hpp"

int main(int argc, char** argv) { return qconj::cli::run_cli(argc, argv, std::cout, std::cerr); }
