#pragma once

#include <stdexcept>
#include <string>

namespace sepcheck {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: wrong shapes, invalid parameters, malformed files.
/// The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Numerical trouble at runtime (non-convergence, lost realness).
/// The CLI maps these to exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class NotHermitian : public InputError {
 public:
  using InputError::InputError;
};

class NotNormalized : public InputError {
 public:
  using InputError::InputError;
};

class NotPositiveSemidefinite : public InputError {
 public:
  using InputError::InputError;
};

class ParameterOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class NonRealExpectation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class EigensolverFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Threshold pre-scan found more than one verdict crossing on [0, 1].
class NonMonotone : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace sepcheck
