#include <iostream>

#include "cover/cli.hpp"

int main(int argc, char** argv) { return cover::cli::run(argc, argv, std::cout, std::cerr); }
