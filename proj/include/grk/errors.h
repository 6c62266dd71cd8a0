#ifndef GRK_ERRORS_H
#define GRK_ERRORS_H

#include <stdexcept>
#include <string>

namespace grk {

// Bad datum selector, unsupported Dynkin type, affine op on a product group.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Elements built over different root data (lattice ranks disagree).
struct DatumMismatch : DomainError {
  using DomainError::DomainError;
};

struct DivisionByZero : DomainError {
  using DomainError::DomainError;
};

// A value that should be a Laurent polynomial still has a denominator.
struct IntegralityError : DomainError {
  using DomainError::DomainError;
};

// Semi-infinite comparison did not settle inside the stabilization window.
struct UnstableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A support box is too small for the requested computation.
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace grk

#endif
