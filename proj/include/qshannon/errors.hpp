#pragma once

#include <stdexcept>
#include <string>

namespace qshannon {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatches and size-cap overflows.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A type invariant failed; the message names the violated invariant.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Eigensolver non-convergence or other numeric breakdown.
class NumericError : public Error {
public:
  using Error::Error;
};

/// Scalar argument outside its domain.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Two algebraically equal computation routes disagreed beyond tolerance.
/// Seeing this means a bug in the library, not bad input.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

} // namespace qshannon
