#include <iostream>
#include <string>
#include <vector>

#include "loves/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return loves::dispatch(args, std::cout, std::cerr);
}
