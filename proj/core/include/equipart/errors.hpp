#pragma once

#include <stdexcept>
#include <string>

namespace equipart {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 2k does not divide n(n+1): the target part sum s^{n,k} is not an integer,
// so no balanced partition can exist and the instance is rejected.
class NonIntegralTarget : public Error {
 public:
  using Error::Error;
};

// Malformed partition text.
class SyntaxError : public Error {
 public:
  using Error::Error;
};

// Block values in partition text are not strictly increasing.
class NotAscending : public Error {
 public:
  using Error::Error;
};

// An element outside [1, n] was passed to an assignment operation.
class ElementNotFound : public Error {
 public:
  using Error::Error;
};

// Perturbation requested on a single-part assignment.
class SinglePart : public Error {
 public:
  using Error::Error;
};

// A completion precondition does not hold for the given partial partition.
class ConditionViolated : public Error {
 public:
  using Error::Error;
};

// Family parameter t outside the case's parity/range.
class InvalidCaseParameters : public Error {
 public:
  using Error::Error;
};

// A value left the exact signed 64-bit range.
class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace equipart
