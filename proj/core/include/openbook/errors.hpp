#pragma once

#include <stdexcept>
#include <string>

namespace openbook {

// Malformed graph file or cycle literal. line() is 1-based for files and 0
// for single-line literals.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  explicit ParseError(const std::string& message) : ParseError(0, message) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Operands bound to different graphs.
class GraphMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation defined only for nonzero anti-nef cycles.
class NotAntiNefError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation defined only for effective (componentwise nonnegative) cycles.
class NotEffectiveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A quantity that is provably an integer / provably nonnegative failed to be
// one. Signals a bug in this library, never a user error.
class InternalCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace openbook
