#pragma once

#include <stdexcept>

namespace bernpoly {

// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A rational literal or input file is malformed or not in canonical form.
struct ParseError : Error {
  using Error::Error;
};

// A pmf value is negative.
struct NegativeMass : Error {
  using Error::Error;
};

// A pmf does not sum to one.
struct NotNormalized : Error {
  using Error::Error;
};

// A margin is 0 or 1 where a nondegenerate one is required.
struct DegenerateMargin : Error {
  using Error::Error;
};

// The requested dimension is outside the supported range.
struct UnsupportedDimension : Error {
  using Error::Error;
};

// A parameter is outside its admissible range.
struct OutOfRange : Error {
  using Error::Error;
};

// Vector or matrix sizes do not match.
struct DimensionMismatch : Error {
  using Error::Error;
};

// The pmf does not belong to the equal-margin class required here.
struct NotAMember : Error {
  using Error::Error;
};

// The pmf is not sigma-countermonotone.
struct NotSigmaCm : Error {
  using Error::Error;
};

// Convex weights are negative, misaligned, or do not sum to one.
struct InvalidWeights : Error {
  using Error::Error;
};

// Filesystem failure while reading or writing.
struct IoError : Error {
  using Error::Error;
};

}  // namespace bernpoly
