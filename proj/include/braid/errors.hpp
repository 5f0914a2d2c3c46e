#pragma once
// Shared error types: parse errors carry source coordinates, validation
// errors flag broken preconditions, budget errors signal exhausted search
// limits, redex errors flag rewrite steps that do not match their word.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braid {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (words, traces, terms).  line/column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A value violates a documented precondition or representation invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out of budget before reaching an answer.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A rewrite step does not match the word at its position.
class RedexError : public Error {
 public:
  using Error::Error;
};

}  // namespace braid
