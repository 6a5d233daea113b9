#include <iostream>
#include <string>
#include <vector>

#include "bsoc/cli.hpp"

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return bsoc::run_cli(args, std::cout, std::cerr);
}
