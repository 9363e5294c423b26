#include "hardy/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return hardy::cli::main_entry(argc, argv, std::cout, std::cerr);
}
