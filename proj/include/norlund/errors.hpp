#pragma once

#include <stdexcept>
#include <string>

namespace norlund {

/// A precondition on the mathematical domain was violated (zero weight,
/// non-invertible constant term, ...). The CLI maps these to exit code 2.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// rho = 1: the denominator of the Eulerian generating function vanishes at t = 0.
class SingularParameter : public DomainError {
 public:
  using DomainError::DomainError;
};

/// alpha * rho = 1: the family collapses to zero and the 1/(1 - alpha rho) factors blow up.
class DegenerateParameter : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The requested route exists only for a restricted parameter set.
class UnsupportedParameter : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace norlund
