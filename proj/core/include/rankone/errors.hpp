#ifndef RANKONE_ERRORS_HPP
#define RANKONE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rankone {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Construction parameters violate an invariant (names stage and index).
struct SchemaError : Error {
  using Error::Error;
};

// An operation needed to lift past the deepest stage the schema provides.
struct DepthExhausted : Error {
  using Error::Error;
};

// Float conversion of an exact Gram matrix came out indefinite. Exact
// arithmetic upstream means this is a bug, not numerical noise.
struct NotPsdError : Error {
  using Error::Error;
};

// Joint sign-cell alphabet would exceed 2^20; the estimate would be vacuous.
struct AlphabetBoundError : Error {
  using Error::Error;
};

// A certified-exact precondition failed downstream (e.g. disjoint supports
// but a nonzero Gram cross entry). Maps to CLI exit code 3.
struct InternalInconsistencyError : Error {
  using Error::Error;
};

}  // namespace rankone

#endif
