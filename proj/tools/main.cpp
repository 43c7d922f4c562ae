#include "farahidi/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return farahidi::cli::run(argc, argv, std::cout, std::cerr);
}
