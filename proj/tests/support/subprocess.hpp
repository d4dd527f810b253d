#pragma once

// Small popen wrapper for driving the CLI binary from tests.

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace testsupport {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout, plus stderr when the command redirects it
};

inline RunResult run_command(const std::string& command) {
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr)
        throw std::runtime_error("popen failed for: " + command);
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    return result;
}

inline std::string shell_quote(const std::string& s) {
    std::string quoted = "'";
    for (char c : s) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    quoted += "'";
    return quoted;
}

// Path of the CLI under test, from the environment (set by ctest) or argv.
inline std::string cli_path_from_env() {
    const char* path = std::getenv("UCYCLE_CLI");
    if (path == nullptr || *path == '\0')
        throw std::runtime_error("UCYCLE_CLI is not set; run through ctest");
    return path;
}

} // namespace testsupport
