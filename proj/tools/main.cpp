#include <iostream>
#include <vector>

#include "pdtfun/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pdtfun::cli_main(args, std::cout, std::cerr);
}
