#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbnn {

/// Invalid dimension, connection number, permutation or state literal.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two objects disagree on the dimension n.
class DimensionError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// A prime dimension was required.
class NotPrimeError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// An enumeration or sweep would exceed its configured resource budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Malformed results / reference data. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pbnn
