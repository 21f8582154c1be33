#include <iostream>
#include <string>
#include <vector>

#include "padfit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return padfit::cli::run(args, std::cout, std::cerr);
}
