#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "vpst/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return vpst::run_cli(args, std::cout, std::cerr, isatty(fileno(stderr)) != 0);
}
