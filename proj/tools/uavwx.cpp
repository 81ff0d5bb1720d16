#include <iostream>

#include "uavwx/cli.hpp"

int main(int argc, char** argv) {
    return uavwx::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
