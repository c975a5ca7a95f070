// Exception types thrown by the minregion library.
#pragma once

#include <stdexcept>
#include <string>

namespace minregion {

/// Malformed caller input: dimension mismatches, non-finite values,
/// non-positive curvature or gradient-bound parameters.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A quantity was requested outside its mathematical domain
/// (e.g. the curve residual beyond the admissible balls).
struct OutOfDomain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation only implemented for a specific ambient dimension.
struct UnsupportedDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No quadratic with the requested minimizer/curvature/gradient data exists.
/// `condition` is 1 when the distance bound fails (point outside the
/// reachable ball) and 2 when the gradient angle falls outside the
/// admissible range.
struct Infeasible : std::runtime_error {
  int condition;
  Infeasible(int cond, const std::string& what)
      : std::runtime_error(what), condition(cond) {}
};

/// Witness construction requested at a point not strictly inside the region.
struct NotInInner : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Witness family requested where the slack margin is too small to vary the
/// gradient direction meaningfully.
struct InsufficientMargin : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A sampling routine was asked to draw points from an empty region.
struct RegionEmpty : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A linear system that should be positive definite was not solvable.
struct SingularSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace minregion
