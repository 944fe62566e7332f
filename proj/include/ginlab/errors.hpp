#pragma once

#include <stdexcept>
#include <string>

namespace ginlab {

/// Configuration outside the range an operation supports (exit code 2).
class UnsupportedConfig : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed user input: bad config spec, bad flag values (exit code 2).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A checked integer operation would have overflowed 64 bits (exit code 3).
class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// An internal consistency check failed. Always a bug, never bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ginlab
