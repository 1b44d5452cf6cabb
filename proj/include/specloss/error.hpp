#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace specloss {

/// Root of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Too few observations for the requested estimation.
class InsufficientData : public Error {
public:
    using Error::Error;
};

/// Design matrix is rank deficient. `column()` names the first dependent column.
class SingularityError : public Error {
public:
    SingularityError(std::string column, const std::string& what)
        : Error(what), column_(std::move(column)) {}
    const std::string& column() const noexcept { return column_; }

private:
    std::string column_;
};

/// Division by a zero quantity (stock count, price, segment mean).
class DivisionDomainError : public Error {
public:
    using Error::Error;
};

class UnsupportedConfiguration : public Error {
public:
    using Error::Error;
};

class AlignmentError : public Error {
public:
    using Error::Error;
};

/// Malformed input text. Line numbers are 1-based; 0 means "not line specific".
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Required column absent from a CSV header.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Record parsed fine but violates a domain invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace specloss
