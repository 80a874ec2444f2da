#pragma once

#include <stdexcept>
#include <string>

namespace idealpack {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands built over different variable contexts.
class ContextMismatchError : public Error {
public:
    explicit ContextMismatchError(const std::string& what) : Error(what) {}
};

/// Input outside an operation's domain (non-square-free where square-free is
/// required, zero ideal, negative coordinates, malformed documents, ...).
class UnsupportedInputError : public Error {
public:
    explicit UnsupportedInputError(const std::string& what) : Error(what) {}
};

/// A configurable resource guard (instance size, search budget) was exceeded.
class GuardExceededError : public Error {
public:
    explicit GuardExceededError(const std::string& what) : Error(what) {}
};

/// An internal invariant failed: a solver certificate did not match, or a
/// cross-check that must hold by theorem came out false. Never expected on
/// correct inputs; treated as a bug (or a very interesting discovery).
class InternalInvariantError : public Error {
public:
    explicit InternalInvariantError(const std::string& what) : Error(what) {}
};

} // namespace idealpack
