#include <iostream>

#include "gyrokit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return gyrokit::cli::run(args, std::cout, std::cerr);
}
