#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bloommst {

/// Thrown when an operation receives arguments outside its domain.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by the text and pixmap readers. `line()` is 1-based, or 0 when the
/// failure is not tied to a line (binary payloads, truncated input).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace bloommst
