#include "rnnen/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return rnnen::run_command(args, std::cout, std::cerr);
}
