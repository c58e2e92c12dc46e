#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twyb {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed tables or mismatched dimensions.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An input violates a mathematical precondition (axiom, unit, equivariance).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded the configured size guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// Two independent checks of the same fact disagreed. Indicates a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. Carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace twyb
