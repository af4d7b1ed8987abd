#pragma once

#include <stdexcept>
#include <string>

namespace knotlink {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, or 0 when not line oriented.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Raised when an exhaustive search exceeds its configured node budget.
/// Never converted into a negative answer.
class SearchLimitError : public Error {
 public:
  using Error::Error;
};

class PropagationConflict : public Error {
 public:
  using Error::Error;
};

}  // namespace knotlink
