#include "aaslab/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return aaslab::cli::run(argc, argv, std::cout, std::cerr);
}
