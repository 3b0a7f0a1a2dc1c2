#include <iostream>
#include <string>
#include <vector>

#include "vtot/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return vtot::cli::run(args, std::cout, std::cerr);
}
