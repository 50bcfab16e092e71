#include <iostream>

#include "wittlink/cli/commands.hpp"

int main(int argc, char** argv) {
    return wittlink::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
