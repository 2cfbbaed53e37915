#include <iostream>

#include "higgsdt/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return higgsdt::run_cli(args, std::cout, std::cerr);
}
