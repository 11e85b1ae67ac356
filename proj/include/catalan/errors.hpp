#pragma once

#include <stdexcept>

namespace catalan {

// Base class for all errors raised by the library.
struct CatalanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands of incompatible sizes (chain lengths or matrix dimensions).
struct DimensionError : CatalanError {
  using CatalanError::CatalanError;
};

// Input outside the domain of a partial operation, e.g. a transformation
// that is not order-preserving where one is required.
struct DomainError : CatalanError {
  using CatalanError::CatalanError;
};

// A matrix whose shape violates the preconditions of a decoding step.
struct MalformedMatrixError : DomainError {
  using DomainError::DomainError;
};

// Unparseable textual input.
struct ParseError : CatalanError {
  using CatalanError::CatalanError;
};

// An enumeration or search that would exceed a configured cap or budget.
struct ResourceLimitError : CatalanError {
  using CatalanError::CatalanError;
};

}  // namespace catalan
