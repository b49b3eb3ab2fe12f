#pragma once

#include <stdexcept>
#include <string>

namespace mpweyl {

// Base class for recoverable domain failures. The CLI maps these to exit code 1,
// as opposed to usage errors (exit 2) and internal logic errors (std::logic_error).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public DomainError {
public:
  DivisionByZero() : DomainError("division by zero scalar") {}
};

class ZeroInput : public DomainError {
public:
  using DomainError::DomainError;
};

class InvalidParameter : public DomainError {
public:
  using DomainError::DomainError;
};

// A module action was asked for a basis index outside the family's support,
// or a generator index outside 1..n.
class UnsupportedIndex : public DomainError {
public:
  using DomainError::DomainError;
};

class IndexOutOfRange : public DomainError {
public:
  using DomainError::DomainError;
};

class NotSameOrbit : public DomainError {
public:
  using DomainError::DomainError;
};

// A weight-module coordinate that must be invertible was zero.
class ZeroCoordinate : public DomainError {
public:
  using DomainError::DomainError;
};

// An identifier lexed fine but does not name a generator or parameter that
// exists at the requested rank (e.g. x4 when n = 2).
class UnknownSymbol : public DomainError {
public:
  using DomainError::DomainError;
};

class ExpressionError : public DomainError {
public:
  using DomainError::DomainError;
};

class SyntaxError : public DomainError {
public:
  SyntaxError(const std::string& message, int line, int column)
      : DomainError(message + " (line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ")"),
        line_(line),
        column_(column),
        short_message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& short_message() const { return short_message_; }

private:
  int line_;
  int column_;
  std::string short_message_;
};

}  // namespace mpweyl
