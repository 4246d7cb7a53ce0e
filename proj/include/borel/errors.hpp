#pragma once

#include <stdexcept>
#include <string>

namespace borel {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text does not match the polynomial grammar.
struct MalformedPolynomial : Error {
  using Error::Error;
};

// The polynomial admits no Gotzmann decomposition.
struct NotAdmissible : Error {
  using Error::Error;
};

// A configured size bound (term count, poset size, walk size) was passed.
struct CapExceeded : Error {
  using Error::Error;
};

// Operands live in different ambients (variable range / degree).
struct AmbientMismatch : Error {
  using Error::Error;
};

struct DegreeTooSmall : Error {
  using Error::Error;
};

struct DegreeTooLarge : Error {
  using Error::Error;
};

// embed() called on an ambient that already starts at variable 0.
struct NoSmallerVariable : Error {
  using Error::Error;
};

// remove() called on a monomial that is not a removable minimal element.
struct NotRemovable : Error {
  using Error::Error;
};

struct ValidationFailed : Error {
  using Error::Error;
};

}  // namespace borel
