#include <iostream>

#include "costar/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    int exit_code = 0;
    auto config = costar::cli::parse_args(argc, argv, std::cout, std::cerr, exit_code);
    if (!config) return exit_code;
    return costar::cli::run(*config, std::cout, std::cerr);
}
