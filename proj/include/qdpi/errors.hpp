#pragma once

#include <stdexcept>
#include <string>

namespace qdpi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes of the operands do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An input violates a domain invariant (trace, positivity, normalization...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to be Hermitian is not, beyond tolerance.
class NonHermitianError : public ValidationError {
 public:
  NonHermitianError(const std::string& what, double deviation)
      : ValidationError(what), deviation_(deviation) {}
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

/// A matrix expected to be positive semidefinite has a negative eigenvalue.
class NegativityError : public ValidationError {
 public:
  NegativityError(const std::string& what, double eigenvalue)
      : ValidationError(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A computed result failed a self-consistency check.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdpi
