#pragma once

#include <stdexcept>
#include <string>

namespace lienorm {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: expression syntax, unknown identifiers, bad JSON,
/// invalid structure constants.
class InputError : public Error {
public:
  using Error::Error;
};

/// Expression syntax error with the 0-based character offset of the problem.
class SyntaxError : public InputError {
public:
  SyntaxError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Operands live on different charts.
class ChartMismatch : public Error {
public:
  using Error::Error;
};

/// A computation was asked for something outside its domain (e.g. a
/// denominator vanishing at the expansion point).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A proven identity failed. Always an internal bug, never a math result.
class IdentityViolation : public Error {
public:
  using Error::Error;
};

}  // namespace lienorm
