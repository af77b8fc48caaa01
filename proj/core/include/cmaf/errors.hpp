#pragma once

#include <stdexcept>
#include <string>

namespace cmaf {

/// Input outside the valid coordinate chart or configuration range.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Iterative solver exceeded its iteration cap.
struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Quadrature grid cannot resolve the requested harmonic degree.
struct ResolutionError : std::runtime_error {
  explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested integration step violates the accuracy guard.
struct StepError : std::runtime_error {
  explicit StepError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cmaf
