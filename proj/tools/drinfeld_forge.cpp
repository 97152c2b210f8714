#include <iostream>

#include "forge_cli.hpp"

int main(int argc, char** argv) { return drinfeld::cli::run(argc, argv, std::cout, std::cerr); }
