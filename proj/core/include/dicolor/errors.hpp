#pragma once

#include <stdexcept>
#include <string>

namespace dicolor {

/// Error raised while reading one of the text formats. Messages carry the
/// 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Raised when an operation is asked to exceed its hard size guard
/// (exhaustive enumeration or brute-force search on too many vertices).
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dicolor
