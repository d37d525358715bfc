#pragma once

#include <stdexcept>
#include <string>

namespace fraclab {

// Thrown when a truncated basis cannot represent a state to the requested
// tail tolerance. Carries the smallest dimension that would suffice.
class CutoffError : public std::runtime_error {
public:
    CutoffError(const std::string& what, int required_dim)
        : std::runtime_error(what), required_dim_(required_dim) {}

    int required_dim() const noexcept { return required_dim_; }

private:
    int required_dim_;
};

// Malformed CSV input. line is 1-based and refers to the offending row.
class CsvError : public std::runtime_error {
public:
    CsvError(const std::string& what, int line)
        : std::runtime_error(what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// Malformed or out-of-range configuration entry. line is 0 when the
// problem is not tied to a specific line.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what, int line = 0)
        : std::runtime_error(what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace fraclab
