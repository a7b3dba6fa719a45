#include <cilef/cli/commands.hpp>

#include <iostream>

int main(int argc, char** argv) { return cilef::cli::run(argc, argv, std::cout, std::cerr); }
