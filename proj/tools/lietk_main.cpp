#include "lietk/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return lietk::cli::run(argc, argv, std::cout, std::cerr);
}
