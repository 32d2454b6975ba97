#include <iostream>

#include "strev/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return strev::run_cli(args, std::cout, std::cerr);
}
