#pragma once

#include <stdexcept>
#include <string>

namespace tabx {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (tableau files, partitions, sign lines).
struct ParseError : Error {
  using Error::Error;
};

/// Structurally invalid object: label gaps, overlaps, non-standard prefix,
/// zero square present or absent against the group type, bad sign keys.
struct ValidationError : Error {
  using Error::Error;
};

/// A cycle that is stale for the given tableau or cannot be moved through
/// in isolation.
struct MoveError : Error {
  using Error::Error;
};

/// Inverse-map failure: the tableau is not in the image of phi.
struct UncoveredInadmissible : Error {
  using Error::Error;
};

/// A structural invariant that should hold for all valid inputs failed.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace tabx
