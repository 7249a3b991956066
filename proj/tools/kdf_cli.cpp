#include <iostream>

#include <kdf/cli.hpp>

int main(int argc, char **argv)
{
    return kdf::cli::main_entry(argc, argv, std::cout, std::cerr);
}
