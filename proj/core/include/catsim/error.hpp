#pragma once

#include <stdexcept>
#include <string>

namespace catsim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Truncation dimension too small, or operands of different dimension.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// The truncated Fock space cannot faithfully hold the requested state.
class TruncationError : public Error {
public:
  using Error::Error;
};

/// Cat-state normalization diverges (odd cat with vanishing amplitude).
class DegenerateCatError : public Error {
public:
  using Error::Error;
};

/// Circuit parameters make a closed-form relation singular.
class DegenerateCircuitError : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

} // namespace catsim
