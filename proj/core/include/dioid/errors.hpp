#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dioid {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (never broadcast).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An operation is undefined for its arguments.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Finite integer arithmetic left the int64 range.
class OverflowError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iteration or window cap was exceeded before a result stabilised.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The dual-residuation associativity condition required by the projector fails.
class HypothesisError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed literal or matrix text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        message_(what),
        line_(line),
        column_(column) {}

  /// The description without the position prefix.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dioid
