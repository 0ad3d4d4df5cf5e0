#pragma once
/*
 * subprocess.hpp
 * --------------
 * Minimal popen wrapper for driving the CLI binary from tests. Arguments
 * are shell-quoted; stdout is captured, stderr dropped unless asked for.
 */

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace subprocess {

struct Result {
    int exit_code = -1;
    std::string out;
};

inline std::string quote(const std::string& arg) {
    std::string quoted = "'";
    for (char c : arg) {
        if (c == '\'') {
            quoted += "'\\''";
        } else {
            quoted += c;
        }
    }
    quoted += "'";
    return quoted;
}

inline Result run(const std::string& binary, const std::vector<std::string>& args,
                  bool merge_stderr = false) {
    std::string command = quote(binary);
    for (const std::string& arg : args) {
        command += " " + quote(arg);
    }
    command += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("popen failed for: " + command);
    }
    Result result;
    std::array<char, 4096> buffer{};
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), got);
    }
    int status = pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace subprocess
