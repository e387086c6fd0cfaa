#include <cstdlib>
#include <iostream>

#include "oba/cli.hpp"

int main(int argc, char** argv) {
    return oba::cli::main_entry(argc, argv, std::cout, std::cerr, std::getenv(oba::cli::kSeedEnvVar));
}
