// runner.hpp — command dispatch for the command-line front end.
#pragma once

#include <string>
#include <vector>

namespace fluxbus {

// Parsed command line.  Commands: couplings, fig4, transfer, fig5, fig6,
// fncheck, oracle.
struct RunConfig {
    std::string command;
    std::string config_path; // optional
    std::string output_dir = ".";
    std::vector<std::string> overrides; // key=value, applied after the file
    bool quiet = false;
};

// Execute a command.  Returns the process exit code: 0 success, 1 config or
// parameter error, 2 numerical contract violation (non-convergence,
// residual-too-large).  Diagnostics go to stderr.
int run(const RunConfig& cfg);

// Parse argv (CLI11) and run.  Parse errors return 1.
int run_cli(int argc, char** argv);

} // namespace fluxbus
