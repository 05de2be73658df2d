#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ksumred {

// Base for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class MalformedWitness : public Error {
public:
    using Error::Error;
};

// Reduction parameters that violate an operation's preconditions.
class ParameterError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

// Work or memory budget exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

class UnsupportedArity : public Error {
public:
    using Error::Error;
};

}  // namespace ksumred
