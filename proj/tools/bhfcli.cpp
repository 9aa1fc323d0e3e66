#include <iostream>

#include "bhf/cli.hpp"

int main(int argc, char** argv) { return bhf::run({argv + 1, argv + argc}, std::cout, std::cerr); }
