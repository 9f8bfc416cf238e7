#include "stringadp/cli.hpp"

int main(int argc, char** argv) {
    return stringadp::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
