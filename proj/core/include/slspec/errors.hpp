#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slspec {

/// Malformed algebraic input: bad moduli, mismatched rings, violated preconditions.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An instance exceeds the configured element-count guard.
class SizeGuardError : public std::runtime_error {
 public:
  SizeGuardError(std::size_t size, std::size_t limit)
      : std::runtime_error("instance too large: " + std::to_string(size) +
                           " elements exceeds the guard of " + std::to_string(limit)),
        size_(size),
        limit_(limit) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t size_;
  std::size_t limit_;
};

/// Instance-text parse failure. `column` is 1-based into the input line.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t column, const std::string& message)
      : std::invalid_argument("column " + std::to_string(column) + ": " + message),
        column_(column),
        message_(message) {}

  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t column_;
  std::string message_;
};

}  // namespace slspec
