#pragma once

#include <stdexcept>
#include <string>

namespace caoli {

/// Base class for every error this library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix/vector shapes disagree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An integer division that well-formed key material guarantees to be exact
/// left a remainder. Raised instead of truncating; the condition is the
/// detector for corrupt or non-scheme input.
class InexactDivisionError : public Error {
public:
    using Error::Error;
};

/// Structural failure while processing key material (zero pivot, wrong
/// triangular shape, negative entries where none can occur).
class MalformedKeyError : public Error {
public:
    using Error::Error;
};

/// The value has no square root modulo the given prime.
class NonResidueError : public Error {
public:
    using Error::Error;
};

/// Invalid parameters or key components.
class ParamError : public Error {
public:
    using Error::Error;
};

/// Message entry outside the allowed range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Ciphertext failed the decrypt self-check.
class InvalidCiphertextError : public Error {
public:
    using Error::Error;
};

/// Key file rejected; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace caoli
