#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace adwpt {

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Argument inside the domain but outside the supported numerical range.
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

/// One or more scenario invariants are violated.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(std::vector<std::string> problems);

    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    std::vector<std::string> problems_;
};

/// Malformed configuration input; line is 0 when not tied to a file line.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line = 0);

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Root finding was given an interval without a sign change.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An optimizer could not classify the objective's shape.
class ClassificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace adwpt
