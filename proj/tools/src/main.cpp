#include <iostream>

#include "ecogen_tools/cli.hpp"

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return ecogen::tools::cli_main(argc, argv, std::cout, std::cerr);
}
