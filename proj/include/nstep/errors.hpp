#pragma once

#include <stdexcept>
#include <string>

namespace nstep {

/// Base of every error raised on a violated precondition.
struct Error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Shapes do not match (non-square input, ragged rows, empty matrix).
struct DimensionError : Error {
    using Error::Error;
};

/// Index list is out of range, not strictly ascending, or has the wrong length.
struct SelectionError : Error {
    using Error::Error;
};

/// Attempt to delete the last column of an extended matrix.
struct LastColumnError : SelectionError {
    using SelectionError::SelectionError;
};

/// Empty or inverted index range.
struct RangeError : Error {
    using Error::Error;
};

/// Argument outside the domain of the operation (n < 2, k < 1 for the fast engine, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Laplace expansion refused because the order is above the guard.
struct SizeGuardError : Error {
    using Error::Error;
};

/// A matrix that must be nonsingular is singular.
struct RegularityError : Error {
    using Error::Error;
};

/// Malformed text input (matrix literals, ranges, conventions).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace nstep
