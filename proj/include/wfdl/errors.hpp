#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wfdl {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a theory or program text, with 1-based position.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public Error {
public:
  ValidationError(const std::string& what, std::vector<std::string> violations)
      : Error(what), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
  std::vector<std::string> violations_;
};

/// An operation was applied outside its domain (defeaters present where
/// none are allowed, signed atoms where only positive ones are, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A configured size bound (literal universe, product blow-up) was exceeded.
class CapExceeded : public Error {
public:
  using Error::Error;
};

} // namespace wfdl
