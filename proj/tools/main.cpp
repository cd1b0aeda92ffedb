// main.cpp — CLI entry point.
#include "fluxbus/runner.hpp"

int main(int argc, char** argv) {
    return fluxbus::run_cli(argc, argv);
}
