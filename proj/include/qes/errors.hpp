#pragma once

#include <stdexcept>
#include <string>

namespace qes {

// Misuse of an API or malformed user input (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, int line, int column)
      : UsageError(format(what, line, column)), message_(what), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }
  // Message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::string message_;
  int line_;
  int column_;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An emitted result failed its exact or numeric check (exit code 2).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gröbner resource caps exhausted (exit code 3).
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qes
