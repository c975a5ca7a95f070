// Quadratic functions with a prescribed minimizer and strong-convexity
// floor, and the constructive witnesses showing a point is attainable as
// the minimizer of a sum.
#pragma once

#include <vector>

#include "minregion/geometry.hpp"

namespace minregion {

/// f(x) = 0.5 x^T Q x + b^T x + c with Q symmetric positive definite.
struct QuadraticFunction {
  Mat Q;
  Vec b;
  double c = 0.0;

  /// Validates: Q square and matching b, symmetric to 1e-12 (relative),
  /// smallest eigenvalue positive.  Throws InvalidInput.
  QuadraticFunction(Mat q, Vec lin, double cst);

  std::size_t dim() const { return b.size(); }
};

double eval(const QuadraticFunction& f, const Vec& x);
Vec grad(const QuadraticFunction& f, const Vec& x);
/// Solves Q x = -b.  Throws SingularSystem if the system collapses.
Vec minimizer(const QuadraticFunction& f);
/// Minimizer of f1 + f2.  Throws SingularSystem if the summed system
/// collapses numerically.
Vec sum_minimizer(const QuadraticFunction& f1, const QuadraticFunction& f2);

/// Admissible angles between a prescribed gradient at x0 and the direction
/// x0 - x_star, for a sigma-strongly-convex function minimized at x_star
/// with gradient norm L at x0: the half-open interval [0, arccos(sigma *
/// d / L)) when sigma*d < L, the single angle {0} at equality, empty beyond.
struct AngleRange {
  enum Kind { Empty, ZeroOnly, HalfOpen } kind = Empty;
  double upper = 0.0;  ///< exclusive upper bound; 0 unless HalfOpen
};

/// Throws InvalidInput when x0 == x_star.
AngleRange admissible_angles(const Vec& x_star, const Vec& x0, double sigma,
                             double L);

/// Builds a 2-D quadratic with minimizer x_star, smallest eigenvalue exactly
/// sigma, and gradient g at x0, via the closed-form entries of its Hessian.
/// Throws Infeasible(1) when sigma*|x0-x_star| > |g| and Infeasible(2) when
/// the gradient angle reaches the admissible bound (open interval; only the
/// exact equality-with-angle-zero case is allowed, yielding sigma * I).
QuadraticFunction construct_quadratic_2d(const Vec& x_star, const Vec& x0,
                                         const Vec& g, double sigma);

/// n-dimensional version: solves the planar problem in the span of
/// {x0 - x_star, g} and extends by sigma * identity on the orthogonal
/// complement, keeping the smallest eigenvalue exactly sigma.  A gradient
/// parallel to x0 - x_star is a handled branch (any completion direction
/// works), not an error.
QuadraticFunction construct_quadratic(const Vec& x_star, const Vec& x0,
                                      const Vec& g, double sigma);

/// Explicit certificate that `point` minimizes f1 + f2: grad f1 = g and
/// grad f2 = -g there, |g| <= L, and each f_i meets its curvature floor.
struct WitnessPair {
  QuadraticFunction f1, f2;
  Vec g;
  Vec point;
};

/// Constructs a witness pair at a strict interior point (in_inner must
/// hold; otherwise NotInInner).  The gradient direction is chosen in the
/// plane spanned by the two cone axes, at the midpoint of the admissible
/// angular overlap clamped 10% of its width from the endpoints, with
/// |g| = L.  At the singleton-threshold point the gradient runs along the
/// minimizer axis and both quadratics degenerate to sigma_i * I.
WitnessPair witness_pair(const ProblemInstance& inst, const Vec& x);

/// k distinct witnesses obtained by rotating the gradient of witness_pair
/// within the admissible cone overlap: offsets are uniform in [-d, d] with
/// d = min(margin/4, 90% of the angular room on each side).  Throws
/// InsufficientMargin when the slack margin is below 1e-6 (and NotInInner
/// outside the closed balls).  k = 1 reduces to witness_pair.
std::vector<WitnessPair> witness_family(const ProblemInstance& inst,
                                        const Vec& x, int k);

}  // namespace minregion
