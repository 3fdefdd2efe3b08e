#pragma once

#include <stdexcept>
#include <string>

namespace liecheck {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (weights, type labels, rationals, cache files).
struct ParseError : Error {
  using Error::Error;
};

struct UnsupportedType : Error {
  using Error::Error;
};

/// A representation would exceed the configured dimension bound.
struct DimensionBoundExceeded : Error {
  using Error::Error;
};

/// The weights of a test module do not lie in the required root-lattice coset.
struct CosetMismatch : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

/// A mathematical invariant that must hold was violated during construction.
struct InternalFailure : Error {
  using Error::Error;
};

}  // namespace liecheck
