#include <iostream>

#include "thicklab/cli.hpp"

int main(int argc, char** argv) {
    return thicklab::cli::run_main(argc, argv, std::cout, std::cerr);
}
