#include <iostream>

#include "ptzeta/cli.hpp"

int main(int argc, char** argv) {
    return ptzeta::cli::run(argc, argv, std::cout, std::cerr);
}
