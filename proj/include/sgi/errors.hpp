#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgi {

/// Caller supplied something outside an operation's contract.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text; `location()` names where parsing stopped.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, std::string location)
      : InvalidInput(location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// The polynomial system has no solution (its ideal is the unit ideal).
class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generic-point solves disagreed across seeds.
class Indeterminate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation ran past its deadline.
class Timeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sgi
