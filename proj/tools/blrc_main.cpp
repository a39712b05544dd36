#include <iostream>

#include "blrc/cli.hpp"

int main(int argc, char** argv) {
    return blrc::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
