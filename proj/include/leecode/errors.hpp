#pragma once

#include <stdexcept>
#include <string>

namespace leecode {

// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

// Singular matrix where full rank is required.
struct RankError : Error {
  using Error::Error;
};

// Generator does not have the shape an operation needs (e.g. puncturing).
struct StructureError : Error {
  using Error::Error;
};

struct IntegralityError : Error {
  using Error::Error;
};

// Enumeration or table would exceed its configured cap.
struct SizeError : Error {
  using Error::Error;
};

// A bounded search finished without an answer; retry with a larger cap.
struct InconclusiveError : Error {
  using Error::Error;
};

// A proven bound or identity failed. Always a bug.
struct InconsistencyError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// Invalid parameters passed to a constructor or operation.
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace leecode
