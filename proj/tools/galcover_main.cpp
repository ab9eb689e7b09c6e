#include <iostream>
#include <string>
#include <vector>

#include "galcover/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return galcover::run(args, std::cout, std::cerr);
}
