#pragma once

#include <stdexcept>
#include <string>

namespace borelkit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different rings (variable counts disagree).
class ContextMismatchError : public Error {
public:
    using Error::Error;
};

/// Exponent arithmetic left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Script rejected: lex error, syntax error, unbound identifier, ring redeclaration.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error(message + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Zero or unit ideal passed to an operation that needs a proper nonzero ideal.
class DegenerateIdealError : public Error {
public:
    using Error::Error;
};

/// A configurable resource cap was hit before the computation finished.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

/// The regularity search exhausted its range: the input is not of Borel type.
class NotBorelTypeError : public Error {
public:
    using Error::Error;
};

/// The generator set does not have the Borel-type shape (missing pure power or
/// broken chain condition).
class StructureViolationError : public Error {
public:
    using Error::Error;
};

}  // namespace borelkit
