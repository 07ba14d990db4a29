#pragma once

#include <stdexcept>
#include <string>

namespace hslab {

/// Precondition violations on user-facing inputs (bad N, sigma out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A search range that does not bracket what was asked for.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Numerical self-checks that failed (quadrature did not reach tolerance, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hslab
