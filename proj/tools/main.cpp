#include "fewnomial/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return fewnomial::cli::run(argc, argv, std::cout, std::cerr);
}
