#include <iostream>

#include "wsh/cli.hpp"

int main(int argc, char** argv) {
    return wsh::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
