// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace hybridfp {

/// Precondition violation (bad argument value or out-of-domain point).
class InvalidArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The denominator f(0, x(0)) of a nonlocal step fell below the singularity guard.
class SingularOperatorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Problem data violates its own domain contract (e.g. a deviation map leaves [0, rho]).
class InvalidProblemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Certificate inputs produced non-finite values; the certificate cannot be evaluated.
/// (A certificate whose conditions merely FAIL is data, not an error.)
class InvalidCertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested benchmark case id does not exist.
class UnknownCaseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text parse failure with 1-based location information.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(message + " (line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ")"),
          message_(message),
          line_(line),
          column_(column) {}

    /// The message without the appended location (for re-wrapping at an
    /// enclosing location, e.g. mapping expression columns into a file).
    [[nodiscard]] const std::string& message() const { return message_; }
    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] int column() const { return column_; }

private:
    std::string message_;
    int line_;
    int column_;
};

}  // namespace hybridfp
