#pragma once

#include <stdexcept>
#include <string>

namespace firefront {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user input: bad parameter values, shapes outside the domain.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation was not met by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Raised when a direction-dependent speed law is handed to a solver that
/// only supports isotropic speeds.
class AnisotropicHamiltonian : public InputError {
 public:
  using InputError::InputError;
};

/// Malformed or inconsistent scenario configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace firefront
