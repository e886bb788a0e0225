#include <iostream>

#include "latdet/cli.hpp"

int main(int argc, char** argv) {
    return latdet::cli::run_cli(argc, argv, std::cout, std::cerr);
}
