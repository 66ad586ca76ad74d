#pragma once

#include <stdexcept>
#include <string>

namespace hk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Point or interval outside the base of the function being queried.
struct OutOfDomain : Error {
  using Error::Error;
};

// Pointwise evaluation requested at a listed singular point.
struct SingularPoint : Error {
  using Error::Error;
};

// Integration to an infinite endpoint without a declared limit there,
// or a norm requested for a function with no finite norm.
struct UnboundedWithoutLimit : Error {
  using Error::Error;
};

// Two operands whose bases must coincide do not.
struct DomainMismatch : Error {
  using Error::Error;
};

struct NonpositiveEpsilon : Error {
  using Error::Error;
};

// Oscillatory family parameters outside p >= 2, q >= 1, q >= p-1.
struct InvalidExponents : Error {
  using Error::Error;
};

// Transform applied to a function whose base it does not handle.
struct UnsupportedBase : Error {
  using Error::Error;
};

// Norm-equivalence verification without an in-measure or declared-a.e. certificate.
struct MissingCertificate : Error {
  using Error::Error;
};

struct EmptyFamily : Error {
  using Error::Error;
};

// Malformed function-description or experiment-configuration input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace hk
