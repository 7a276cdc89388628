#include <spreadpoly/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return spreadpoly::cli::run(argc, argv, std::cout, std::cerr); }
