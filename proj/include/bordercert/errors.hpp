#pragma once

#include <stdexcept>
#include <string>

namespace bordercert {

// Invalid user-supplied input (bad signature, malformed assignment, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Monomials or polynomials over different ambient variable counts.
class DimensionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// A search exceeded its bound without finding what must exist.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant the construction guarantees was violated. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define BORDERCERT_CHECK(cond, msg)                                      \
  do {                                                                   \
    if (!(cond))                                                         \
      throw ::bordercert::InternalError(std::string(__func__) + ": " + (msg)); \
  } while (0)

}  // namespace bordercert
