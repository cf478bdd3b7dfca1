#include <iostream>
#include <string>
#include <vector>

#include "vedeg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return vedeg::run_cli(args, std::cin, std::cout, std::cerr);
}
