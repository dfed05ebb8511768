#pragma once

#include <stdexcept>
#include <string>

namespace weylconn {

/// Base class for all errors raised by the engine.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two values from different variable tables / Weyl contexts were combined.
class ContextMismatchError : public Error {
public:
    explicit ContextMismatchError(const std::string& what = "operands belong to different contexts")
        : Error(what) {}
};

class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what = "division by zero") : Error(what) {}
};

/// Raised by operations that require a nonzero element (leading term of 0, ...).
class ZeroElementError : public Error {
public:
    explicit ZeroElementError(const std::string& what = "operation undefined for the zero element")
        : Error(what) {}
};

/// The staircase of the initial ideal is infinite.
class InfiniteRankError : public Error {
public:
    explicit InfiniteRankError(const std::string& what = "ideal has infinite holonomic rank")
        : Error(what) {}
};

/// A claimed basis is not a basis (singular change-of-basis matrix).
class NotABasisError : public Error {
public:
    explicit NotABasisError(const std::string& what = "given elements do not form a basis")
        : Error(what) {}
};

class SingularMatrixError : public Error {
public:
    explicit SingularMatrixError(const std::string& what = "matrix is singular") : Error(what) {}
};

/// Input-layer error: bad expression text, unknown name, malformed config.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

} // namespace weylconn
