#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dlproof {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t col, std::string expected)
      : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) +
              ": expected " + expected),
        line_(line), col_(col), expected_(std::move(expected)) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t col_;
  std::string expected_;
};

class DuplicateAxiom : public Error {
 public:
  using Error::Error;
};

// Input uses constructs outside the fragment an algorithm supports.
class FragmentError : public Error {
 public:
  using Error::Error;
};

class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

class NotEntailed : public Error {
 public:
  using Error::Error;
};

class NotDerivable : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NoProofWithinBound : public Error {
 public:
  using Error::Error;
};

}  // namespace dlproof
