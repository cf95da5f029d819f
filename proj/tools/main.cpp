#include <iostream>
#include <string>
#include <vector>

#include "hallinv/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return hallinv::run(args, std::cout, std::cerr);
}
