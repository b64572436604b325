#pragma once

// Runs the built CLI binary and captures exit status plus combined output.

#include <cstdio>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace ternary5::testing {

struct CliResult {
    int exit_code = -1;
    std::string output;

    bool contains(const std::string& needle) const {
        return output.find(needle) != std::string::npos;
    }
};

inline CliResult run_cli(const std::string& args) {
    const std::string command = std::string(TERNARY5_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
    CliResult result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace ternary5::testing
