#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hertz {

/// Base of all errors raised by the library for invalid input or violated
/// preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A brute-force routine was asked to go beyond its configured ceiling.
class CeilingExceeded : public Error {
 public:
  CeilingExceeded(const std::string& what, int requested, int ceiling)
      : Error(what + ": requested " + std::to_string(requested) +
              " exceeds ceiling " + std::to_string(ceiling)),
        requested_(requested),
        ceiling_(ceiling) {}

  int requested() const { return requested_; }
  int ceiling() const { return ceiling_; }

 private:
  int requested_;
  int ceiling_;
};

/// Malformed textual input. Line and column are 1-based; line is 0 when the
/// input was a single token.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string where = line > 0 ? "line " + std::to_string(line) + ", " : "";
    return where + "column " + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace hertz
