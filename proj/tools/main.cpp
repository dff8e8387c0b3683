#include <iostream>
#include <vector>

#include "lattice_forge/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lattice_forge::cli::run(args, std::cout, std::cerr);
}
