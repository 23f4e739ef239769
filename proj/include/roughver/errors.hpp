#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace roughver {

/// Raised when an operation's preconditions on its arguments are violated.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation would exceed a configured size or memory budget.
/// `last_completed` carries the largest step that finished, or -1.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what, long last_completed = -1)
      : std::runtime_error(what), last_completed_(last_completed) {}

  long last_completed() const noexcept { return last_completed_; }

 private:
  long last_completed_;
};

/// Two independent computations of the same quantity disagreed.
class InternalDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input. `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at byte " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace roughver
