#include "samelson/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return samelson::run_cli(argc, argv, std::cout, std::cerr);
}
