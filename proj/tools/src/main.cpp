#include <iostream>
#include <string>
#include <vector>

#include "bern/cli/app.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return bern::cli::run(args, std::cout, std::cerr);
}
