#include <iostream>
#include <string>
#include <vector>

#include "clusterpic/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return clusterpic::run_cli(std::move(args), std::cout, std::cerr);
}
