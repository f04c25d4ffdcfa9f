#pragma once

#include <stdexcept>
#include <string>

namespace kacrep {

/// Base for every error raised on bad caller input. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands declared over different parameter lists, or an undeclared parameter.
class DeclarationError : public InputError {
 public:
  using InputError::InputError;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// An internal consistency check failed. Never expected on valid input.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kacrep
