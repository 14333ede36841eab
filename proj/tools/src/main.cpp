#include <iostream>

#include "gammalase_cli/commands.hpp"

int main(int argc, char** argv)
{
    return gammalase::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
