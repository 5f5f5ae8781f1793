#ifndef QHANKEL_ERROR_HPP
#define QHANKEL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qhankel {

/// Base class for all user-facing errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands come from different precision regimes, or an exact-only
/// algorithm was handed floating-point data.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Non-conformable shapes, length mismatches and out-of-range indices.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Division by zero, invalid parameters (e.g. a root of -1 that is not one).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Recurrence fit with fewer equations than unknown coefficients.
class UnderdeterminedError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant was violated. Never caused by user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qhankel

#endif  // QHANKEL_ERROR_HPP
