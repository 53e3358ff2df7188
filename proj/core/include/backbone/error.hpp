#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bb {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller asked for something that cannot be done as requested:
/// unknown names, invalid parameters, filters a method does not support.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input data violates the graph model (bad rows, weights, labels).
class DataError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A scoring method could not produce a result (solver did not converge,
/// degenerate input for the null model, invalid custom backbone).
class MethodError : public Error {
 public:
  using Error::Error;
};

}  // namespace bb
