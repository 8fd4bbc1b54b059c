#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptdiag {

// A precondition on user-supplied data failed: division by zero, evaluation
// at a pole, a constant polynomial where roots are required, mismatched
// dimensions. Surfaced by the CLI as an input error.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An identity that must hold by construction did not (e.g. p = d * m left a
// remainder). Always a bug in the arithmetic, never a user mistake.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed problem file or entry expression.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& message)
      : InputError(message + " at offset " + std::to_string(offset) + ", expected " + expected),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace ptdiag
