#pragma once

#include <stdexcept>
#include <string>

namespace permcount {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// n < 4: the constructions below need four distinct points.
struct UnsupportedSizeError : Error {
  using Error::Error;
};

struct InvalidCellError : Error {
  using Error::Error;
};

/// An enumeration or elimination exceeded its configured budget.
struct BudgetExceededError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

/// Malformed or inconsistent data in an import.
struct FormatError : Error {
  using Error::Error;
};

struct DegenerateInputError : Error {
  using Error::Error;
};

/// The recipe-based eigenvector construction produced a vector that
/// failed exact verification.
struct ReconstructionFailedError : Error {
  using Error::Error;
};

/// A block grid violates the preconditions of symmetric vectorization.
struct BlockLayoutError : Error {
  using Error::Error;
};

}  // namespace permcount
