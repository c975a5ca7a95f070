// Monte-Carlo cross-validation of the region machinery against randomly
// sampled quadratic instances, plus small numeric spot-check helpers.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "minregion/quadratic.hpp"
#include "minregion/region.hpp"

namespace minregion {

/// Per-regime slice of a verification run.
struct RegimeTally {
  std::uint64_t trials = 0;
  std::uint64_t accepted = 0;    ///< trials that produced a checkable point
  std::uint64_t violations = 0;  ///< trials where an invariant failed
};

/// Outcome of a Monte-Carlo verification run.
struct VerificationReport {
  std::string mode;          ///< "soundness" or "completeness"
  std::uint64_t trials = 0;  ///< total trials attempted
  std::uint64_t accepted = 0;
  std::uint64_t violations = 0;
  double worst_margin = 0.0;  ///< most adversarial signed margin seen (see below)
  std::uint64_t seed = 0;
  std::map<std::string, RegimeTally> by_regime;

  bool ok() const { return violations == 0; }
};

/// Draw a random positive-definite quadratic with prescribed minimizer and
/// smallest eigenvalue exactly `sigma`; remaining eigenvalues are spread
/// uniformly in [sigma, sigma * (1 + spread)].  Deterministic given `rng`.
QuadraticFunction sample_quadratic(const Vec& x_star, double sigma, int n,
                                   double spread, std::mt19937_64& rng);

/// Soundness: sample pairs of random quadratics matching the instance's
/// minimizers and curvature bounds, minimize their sum exactly, and confirm
/// the classifier never calls the true sum-minimizer Exterior.  Trials whose
/// sum-gradient at the sum-minimizer exceeds L (up to 1e-12 slack) are
/// skipped rather than counted against the classifier.  `worst_margin` is
/// the smallest attainability slack observed over accepted trials (negative
/// values within -tol are tolerated boundary noise).
VerificationReport mc_soundness(const ProblemInstance& inst,
                                std::uint64_t trials, double spread,
                                std::uint64_t seed,
                                double tol = kDefaultClassifyTol);

/// Completeness: rejection-sample interior points of the region and confirm
/// the constructive witness machinery produces a valid certificate at each:
/// gradient bound respected, curvature floors respected, stationarity of the
/// sum at the point, and the exact sum-minimizer landing back on the point.
/// `worst_margin` is the largest stationarity/minimizer error observed.
VerificationReport mc_completeness(const ProblemInstance& inst,
                                   std::uint64_t trials, std::uint64_t seed);

/// Max abs component error between an analytic gradient and a central
/// finite-difference estimate at `x`.
double fd_gradient_check(const QuadraticFunction& f, const Vec& x,
                         double h = 1e-5);

}  // namespace minregion
