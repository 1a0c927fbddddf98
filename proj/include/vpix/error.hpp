#pragma once

#include <stdexcept>
#include <string>

namespace vpix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Input violates a documented precondition or type invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Text or binary input is malformed. Carries the offending line when known.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, int line = 0)
        : ValidationError(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace vpix
