#include <iostream>
#include <string>
#include <vector>

#include "obcalc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return obcalc::cli::run(args, std::cout, std::cerr);
}
