#include <iostream>

#include "vwa/cli/commands.hpp"

int main(int argc, char** argv) { return vwa::cli::run(argc, argv, std::cerr); }
