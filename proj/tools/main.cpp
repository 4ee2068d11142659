#include <iostream>

#include "meckit/cli.hpp"

int main(int argc, char** argv) {
    return meckit::run_cli(argc, argv, std::cout, std::cerr);
}
