#include "isofdp/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return isofdp::run_cli(argc, argv, std::cout, std::cerr);
}
