#include <iostream>

#include "skewlab/cli.hpp"

int main(int argc, char** argv) {
    return skewlab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
