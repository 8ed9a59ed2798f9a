#include <iostream>

#include "qv/cli.hpp"

int main(int argc, char** argv) { return qv::run_cli(argc, argv, std::cout, std::cerr); }
