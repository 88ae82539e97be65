#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace teamlogic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula, structure, team or ESO text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A search exceeded one of the configured EvalLimits. Never a verdict.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Precondition violations: unknown variables, free variables outside the
/// team domain, re-quantified variables, malformed inputs to a translation.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace teamlogic
