#pragma once

#include <stdexcept>
#include <string>

namespace iwasawa {

/// Input outside an operation's domain (bad discriminant, non-prime, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical verification route did not settle (growth not yet linear,
/// mu-like growth, level bound too small).
class NotStabilized : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal cross-check failed. Indicates a bug, never bad input.
class VerificationFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace iwasawa
