#include "nsga2/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return nsga2::cli_main(argc, argv, std::cout, std::cerr);
}
