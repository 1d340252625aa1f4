#include <iostream>

#include "slotdesign/cli.hpp"

int main(int argc, char** argv) { return slotdesign::run_cli(argc, argv, std::cout, std::cerr); }
