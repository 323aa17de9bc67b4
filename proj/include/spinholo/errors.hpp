#pragma once

#include <stdexcept>
#include <string>

namespace spinholo {

// Root of every error raised by the library. Numerical precondition failures
// derive from NumericalError; malformed user input derives from InputError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class NonHermitianInput : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonUnitaryInput : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonUnitaryTarget : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ZeroCoupling : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class OutOfRange : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonCanonicalInput : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonCyclicPulse : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DimensionOverflow : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace spinholo
