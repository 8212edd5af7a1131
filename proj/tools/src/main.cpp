#include <iostream>

#include "spr/cli/commands.hpp"

int main(int argc, char** argv) { return spr::cli::run(argc, argv, std::cout, std::cerr); }
