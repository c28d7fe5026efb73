#ifndef ALTKIT_ERROR_HPP
#define ALTKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace altkit {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Shape or parent mismatch between algebras, elements and operators.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Invalid family parameters or malformed structure constants.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An identity check was requested without the data it needs.
class ContextError : public Error {
 public:
  using Error::Error;
};

class NotApplicableError : public Error {
 public:
  using Error::Error;
};

// The supplied map is not an order-two automorphism.
class ReflectionError : public Error {
 public:
  using Error::Error;
};

// Eigenspaces or the canonical basis could not be formed.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

// i·w = w·i inside the -1 eigenspace: the input cannot be a division algebra.
class NucleusContradictionError : public DecompositionError {
 public:
  using DecompositionError::DecompositionError;
};

// A square root left the rational field.
class InexactError : public Error {
 public:
  using Error::Error;
};

}  // namespace altkit

#endif  // ALTKIT_ERROR_HPP
