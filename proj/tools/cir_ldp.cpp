#include <iostream>

#include "cirldp/commands.hpp"

int main(int argc, char** argv) { return cirldp::run_cli(argc, argv, std::cout, std::cerr); }
