#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncwitt {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position()` is the 0-based offset of the
/// offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}

    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Operands built over different coefficient rings or generator sets.
class MismatchError : public Error {
public:
    using Error::Error;
};

/// An argument outside an operation's domain (composite prime, modulus < 2,
/// truncation too small, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A ghost vector with no integer Witt preimage. `index()` is the first
/// coordinate whose division is inexact.
class NotInImageError : public Error {
public:
    NotInImageError(const std::string& msg, std::size_t index)
        : Error(msg), index_(index) {}

    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// A violated internal invariant: a bug in the library, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ncwitt
