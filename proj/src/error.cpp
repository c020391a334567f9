#include "adwpt/error.hpp"

namespace adwpt {

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
    std::string out = "invalid scenario: ";
    for (std::size_t i = 0; i < problems.size(); ++i) {
        if (i) out += "; ";
        out += problems[i];
    }
    return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : std::invalid_argument(join_problems(problems)), problems_(std::move(problems)) {}

ConfigError::ConfigError(const std::string& what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

}  // namespace adwpt
