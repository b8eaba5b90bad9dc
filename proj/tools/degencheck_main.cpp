#include <iostream>
#include <vector>

#include "degen/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return degen::run_cli(args, std::cout, std::cerr);
}
