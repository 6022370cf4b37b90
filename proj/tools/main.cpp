#include <iostream>

#include "tictactoe/cli.hpp"

int main(int argc, char** argv) {
    return tictactoe::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
