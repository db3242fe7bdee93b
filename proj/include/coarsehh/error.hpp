#pragma once

#include <stdexcept>
#include <string>

namespace coarsehh {

/// Base class of every exception thrown by the library. The C API maps the
/// subclasses onto status codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (bad JSON, invalid group table,
/// non-invariant subset, ...). Invalid data is rejected, never repaired.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size or search bound was exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined over the requested coefficient domain
/// (e.g. rank over Z, or an equivariant computation in bad characteristic).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An algebraic identity that must hold by construction failed. This always
/// indicates a convention bug and carries a diagnostic.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace coarsehh
