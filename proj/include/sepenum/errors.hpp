#pragma once

#include <stdexcept>
#include <string>

namespace sepenum {

/// Malformed graph or weights file. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An exhaustive routine was asked to run beyond its size guard.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs handed to a pipeline stage are inconsistent (e.g. a separator
/// list that is not complete for the graph).
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sepenum
