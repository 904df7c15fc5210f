#pragma once

#include <stdexcept>
#include <string>

namespace ftstab {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible dimensions.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// A vector with (numerically) zero norm was passed where a direction is required.
struct ZeroVector : Error {
  using Error::Error;
};

/// A state or derivative became NaN/Inf during integration.
struct NonFinite : Error {
  using Error::Error;
};

/// Polar coordinates are undefined: one of the radii is below the pole threshold.
struct PolarSingularity : Error {
  using Error::Error;
};

/// A scalar parameter violates its documented range.
struct InvalidParam : Error {
  using Error::Error;
};

/// Initial radius lies outside the finite-time neighborhood where the bound applies.
struct OutOfNeighborhood : Error {
  using Error::Error;
};

/// Every sample handed to an estimator was a zero of the field.
struct DegenerateSample : Error {
  using Error::Error;
};

/// An internal cross-check failed (e.g. an expectation value with a large
/// imaginary residue). Indicates a bug or corrupted input, not user error.
struct InternalConsistency : Error {
  using Error::Error;
};

/// Malformed configuration input (unknown key, unparsable value).
struct ParseError : Error {
  using Error::Error;
};

/// Well-formed configuration with an invalid combination of values.
struct ValidationError : Error {
  using Error::Error;
};

/// Filesystem failure, message carries the offending path.
struct IoError : Error {
  using Error::Error;
};

}  // namespace ftstab
