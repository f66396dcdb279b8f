#include "qcoh/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qcoh::run_cli(argc, argv, std::cout, std::cerr); }
