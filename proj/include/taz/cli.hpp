// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TAZ_CLI_HPP
#define TAZ_CLI_HPP

#include <string>
#include <vector>

namespace taz {

// Exit codes: 0 verdict reached, 2 usage/parse error, 3 class mismatch,
// 4 budget exhausted or constraint-map divergence.
struct CliResult {
    std::string out;
    std::string err;
    int exit_code = 0;
};

// Run one invocation with captured streams (args exclude the program
// name). Deterministic stdout; timing goes to the stderr report line.
CliResult run_cli(const std::vector<std::string>& args);

// Stream-printing wrapper for main().
int run_main(int argc, char** argv);

}  // namespace taz

#endif
