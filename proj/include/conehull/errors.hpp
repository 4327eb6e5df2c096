#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conehull {

/** Base class for every error raised by the library. */
class ConeError : public std::runtime_error
{
public:
    explicit ConeError(const std::string& what) : std::runtime_error(what) {}
};

/** Vectors, forms or cones of incompatible length were combined. */
class DimensionError : public ConeError
{
public:
    explicit DimensionError(const std::string& what) : ConeError(what) {}
};

/** An operation was called outside its documented precondition. */
class PreconditionError : public ConeError
{
public:
    explicit PreconditionError(const std::string& what) : ConeError(what) {}
};

/** An internal invariant was found violated; always a bug. */
class InvariantError : public ConeError
{
public:
    explicit InvariantError(const std::string& what) : ConeError(what) {}
};

/** A solve exceeded its deadline. */
class TimeoutError : public ConeError
{
public:
    explicit TimeoutError(const std::string& what) : ConeError(what) {}
};

/** Malformed text input. `line()` is 1-based. */
class ParseError : public ConeError
{
public:
    ParseError(std::size_t line, const std::string& what)
        : ConeError("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace conehull
