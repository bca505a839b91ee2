#pragma once

#include <stdexcept>
#include <string>

namespace scsp {

/// Refusal to start a computation whose configured size cap is exceeded.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

/// Text-format rejection, carrying the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace scsp
