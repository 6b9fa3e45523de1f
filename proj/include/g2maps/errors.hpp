#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace g2maps {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vectors or matrices of incompatible sizes.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Fewer distinct points than an operation needs (e.g. cross-ratio).
class DegenerateConfiguration : public Error {
public:
    using Error::Error;
};

/// A point was required to lie on a line (or curve) and does not.
class IncidenceError : public Error {
public:
    using Error::Error;
};

/// A conic or other form that must be nondegenerate is degenerate.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

/// A polynomial variable without an assigned value.
class MissingBinding : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Truncated series of different orders were combined.
class OrderMismatch : public Error {
public:
    using Error::Error;
};

/// (r, d) outside the regime d > 2g - 2.
class OutOfRegime : public Error {
public:
    using Error::Error;
};

/// Text input that does not parse; carries the 0-based offset of the problem.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A structured document that violates its schema; `pointer` is a JSON pointer.
class ValidationError : public Error {
public:
    ValidationError(std::string pointer, const std::string& what)
        : Error(pointer.empty() ? what : pointer + ": " + what), pointer_(std::move(pointer)) {}

    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

}  // namespace g2maps
