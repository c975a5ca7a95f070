// Problem description and the canonical frame/angle computations on which
// the region characterization is built.
#pragma once

#include <cstddef>

#include "minregion/linalg.hpp"

namespace minregion {

/// Points treated as coincident with a minimizer when within
/// kMinimizerSnap * max(1, r) of it.
inline constexpr double kMinimizerSnap = 1e-12;
/// Angular slack tolerance separating inner/outer membership.
inline constexpr double kAngleTol = 1e-9;
/// Relative tolerance on the half-distance r for regime threshold ties.
inline constexpr double kRadiusTol = 1e-9;
/// Default point tolerance for boundary classification.
inline constexpr double kDefaultClassifyTol = 1e-7;

/// Two strongly convex unknowns are described only through their minimizers,
/// strong-convexity parameters and the shared gradient-norm bound at a
/// candidate point.
struct ProblemInstance {
  Vec x1_star;    ///< minimizer of the first function
  Vec x2_star;    ///< minimizer of the second function
  double sigma1;  ///< strong-convexity parameter of the first function, > 0
  double sigma2;  ///< strong-convexity parameter of the second function, > 0
  double L;       ///< gradient-norm bound, > 0

  /// Validates: equal dimensions >= 2, all entries finite, sigma1, sigma2,
  /// L positive.  Equal minimizers are allowed (the region degenerates to
  /// that single point).  Throws InvalidInput.
  ProblemInstance(Vec x1, Vec x2, double s1, double s2, double grad_bound);

  std::size_t dim() const { return x1_star.size(); }
};

/// Rigid change of coordinates placing the minimizer pair at (-r, 0, ..., 0)
/// and (+r, 0, ..., 0).  When the second function has the larger
/// strong-convexity parameter the roles are exchanged first (recorded in
/// `swapped`), so the minimizer at -r always belongs to the function with
/// the larger sigma.
struct CanonicalFrame {
  Mat E;        ///< n x n orthogonal; first column points along the minimizer axis
  Vec b;        ///< frame origin (midpoint of the minimizers)
  double r;     ///< half distance between the minimizers
  bool swapped; ///< true when the function roles were exchanged
};

CanonicalFrame canonical_frame(const ProblemInstance& inst);

/// z = E^T (x - b).  Throws InvalidInput on dimension mismatch.
Vec to_canonical(const CanonicalFrame& f, const Vec& x);
/// x = E z + b.  Throws InvalidInput on dimension mismatch.
Vec from_canonical(const CanonicalFrame& f, const Vec& z);

/// Distances and angles of one evaluation point, in the caller's labeling.
///
/// phi1/phi2 are the half-opening angles of the admissible gradient cones
/// (arccos(sigma_i * d_i / L)); alpha1/alpha2 measure each minimizer-to-point
/// direction against the minimizer axis; psi = pi - (alpha2 - alpha1) is the
/// angle between the first cone axis and the reversed second cone axis; and
/// slack = phi1 + phi2 - psi decides membership.  `defined` is false at the
/// minimizers and whenever the point leaves a ball of radius L/sigma_i; the
/// angle fields are NaN in that case (d1/d2 stay valid).
struct AngleReport {
  double d1 = 0.0, d2 = 0.0;
  double phi1 = 0.0, phi2 = 0.0;
  double alpha1 = 0.0, alpha2 = 0.0;
  double psi = 0.0;
  double slack = 0.0;
  bool defined = false;
};

AngleReport angle_report(const ProblemInstance& inst, const Vec& x);

}  // namespace minregion
