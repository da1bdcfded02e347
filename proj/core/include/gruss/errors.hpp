#pragma once

#include <stdexcept>
#include <string>

namespace gruss {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands do not conform (dimension or sequence length mismatch).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Input too small or collapsed to be meaningful (n < 2, lo == hi, ...).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Malformed values: non-finite numbers, negative weights, bad parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An enclosure could not be made valid within the allowed inflation.
class FittingFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace gruss
