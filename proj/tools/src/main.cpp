#include <iostream>

#include "cra_cli/cli.hpp"

int main(int argc, char** argv) {
    return cra::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
