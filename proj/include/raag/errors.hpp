#pragma once

#include <stdexcept>
#include <string>

namespace raag {

// Base of every error thrown by the library. The CLI maps the concrete
// subclasses onto exit statuses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: unknown vertices, bad files, out-of-range arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

// Well-formed input on which the requested operation is undefined.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An Omega-partition or presentation that violates its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Caller skipped a required preparation step.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Memory guard or enumeration cap exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant the code relies on did not hold.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace raag
