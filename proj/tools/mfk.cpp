#include <iostream>
#include <vector>

#include "mfk/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mfk::dispatch(args, std::cout, std::cerr);
}
