#include <iostream>

#include "bredon/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bredon::cli::run(args, std::cout, std::cerr);
}
