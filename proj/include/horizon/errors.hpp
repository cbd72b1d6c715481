#pragma once

#include <stdexcept>
#include <string>

namespace horizon {

/// Raised when a covariance matrix violates a physical or numerical
/// precondition (not positive definite, symplectic eigenvalue below 1).
class InvalidState : public std::domain_error {
 public:
  explicit InvalidState(const std::string& what) : std::domain_error(what) {}
};

/// Raised by limit formulas evaluated exactly on a singular boundary.
class DegenerateInput : public std::domain_error {
 public:
  explicit DegenerateInput(const std::string& what) : std::domain_error(what) {}
};

}  // namespace horizon
