#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace llmetrica {

/// Bad or inconsistent input data (CLI exit code 1).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure with a source location; line is 1-based, 0 when unknown.
class ParseError : public InputError {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : InputError(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A precondition of a metric or analysis is not met (e.g. no alphabetic tokens).
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

/// A remote service answered, but not according to the protocol (CLI exit code 2).
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A remote service could not be reached after retries (CLI exit code 2).
class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace llmetrica
