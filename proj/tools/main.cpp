#include <iostream>

#include "asymean/cli.hpp"

int main(int argc, char** argv)
{
    return asymean::runCli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
