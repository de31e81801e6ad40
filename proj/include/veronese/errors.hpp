#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace veronese {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: expression syntax, unknown names, bad points.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public InputError {
 public:
  explicit UnknownVariable(const std::string& name)
      : InputError("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Operands live in different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A Groebner computation hit its configured size or step cap. This is a
/// resource failure, never a mathematical verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotZeroDimensional : public Error {
 public:
  explicit NotZeroDimensional(const std::string& variable)
      : Error("ideal is not zero-dimensional: no pure power of '" + variable +
              "' among the leading monomials"),
        variable_(variable) {}
  const std::string& variable() const noexcept { return variable_; }

 private:
  std::string variable_;
};

/// An internal cross-check disagreed. Indicates a bug, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace veronese
