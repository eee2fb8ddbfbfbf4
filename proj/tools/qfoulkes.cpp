#include <iostream>

#include "qfoulkes/cli.hpp"

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return qfoulkes::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
