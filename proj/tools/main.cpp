#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    return lingua::cli::run(argc, argv, std::cout, std::cerr);
}
