#include <iostream>

#include "run.hpp"

int main(int argc, char** argv) {
    return tpjc::cli::run_cli(argc, argv, std::cout, std::cerr);
}
