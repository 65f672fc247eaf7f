#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algaudit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Binary operation on polynomials declared over different parameter lists.
class SpaceMismatch : public Error {
public:
    using Error::Error;
};

/// A rational whose denominator vanishes modulo the chosen prime.
class BadPrime : public Error {
public:
    using Error::Error;
};

/// A specialization of a formal parameter that makes a denominator vanish.
class DegenerateParameter : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Enumeration too large to run.
class Infeasible : public Error {
public:
    using Error::Error;
};

/// Input that violates an operation's precondition (nonlinear pattern,
/// malformed family, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column),
          message_(msg) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

}  // namespace algaudit
