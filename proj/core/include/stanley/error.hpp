#pragma once

#include <stdexcept>
#include <string>

namespace stanley {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A mathematical precondition does not hold (e.g. I is not contained in J).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed a configured resource guard.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

} // namespace stanley
