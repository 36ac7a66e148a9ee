#include <vector>

#include "oracleforge/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return oracleforge::cli::run_cli(args);
}
