#pragma once

#include <stdexcept>

namespace hyperorder {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something malformed: unparsable text, mixed discriminants.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Division by zero, irrational results where a rational was required,
// vanishing rising factorials in a denominator.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Parameters outside a formula's documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Instance too large for an exhaustive method.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperorder
