#include "mpp/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return mpp::run_cli(args, std::cout, std::cerr);
}
