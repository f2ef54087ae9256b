#pragma once

#include <stdexcept>
#include <string>

namespace hlag {

/// Precondition violated by a caller-supplied argument.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested size is beyond a configured guard (see `size_guard`).
class UnsupportedSize : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or weight file. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Default size guard for exact solvers and exhaustive searches, raised by the
/// HLAG_GUARD_N environment variable when it holds a larger integer.
int size_guard(int default_limit);

}  // namespace hlag
