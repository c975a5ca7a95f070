// Classification of the attainable-minimizer region: regime detection,
// point membership, the implicit curve residual and boundary tracing.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "minregion/geometry.hpp"

namespace minregion {

/// Shape regime of the region as the half-distance r grows relative to the
/// ball radii L/sigma.  Ties at the thresholds resolve to the earlier case
/// (closed intervals on the left).
enum class RegimeCase { TwoCusps, OneCusp, ThreeArcs, Singleton, Empty };

/// Closed-form quantities describing the regime.  Indices follow the sorted
/// labeling (index 1 = function with the larger sigma), which is the order
/// the formulas require; `swapped` from canonical_frame records whether that
/// differs from the caller's order.  lambda_i is the on-circle slack
/// threshold for circle i (populated whenever the minimizers are separated);
/// (lambda_i, +/-nu_i) are the junctions where the curve meets circle i, and
/// nu_i is populated only when that junction exists, i.e. for r in
/// (L/(2*sigma_i), r_singleton].
struct RegionRegime {
  RegimeCase kind = RegimeCase::Empty;
  double r = 0.0;
  double gamma1 = 0.0, gamma2 = 0.0;  ///< (L/sigma_i)^2, sorted labeling
  double beta = 0.0;                  ///< sigma2/sigma1 <= 1, sorted labeling
  double thresh_arc1 = 0.0;           ///< L/(2*sigma1)
  double thresh_arc2 = 0.0;           ///< L/(2*sigma2)
  double thresh_singleton = 0.0;      ///< (L/2)(1/sigma1 + 1/sigma2)
  std::optional<double> lambda1, nu1;
  std::optional<double> lambda2, nu2;
};

RegionRegime regime(const ProblemInstance& inst);

/// The single attainable point when r equals the singleton threshold, in the
/// caller's coordinates.  Throws OutOfDomain in any other regime.
Vec singleton_point(const ProblemInstance& inst);

enum class Location { Interior, Boundary, Exterior };

/// Boundary piece labels, in the caller's function numbering (Arc1 lies on
/// the ball around the caller's x1_star, etc.).
enum class BoundaryPiece { None, CurveT, Arc1, Arc2, CuspX1, CuspX2, SingletonPoint };

struct Membership {
  Location location = Location::Exterior;
  BoundaryPiece piece = BoundaryPiece::None;
};

/// Outer test: x lies in both closed balls, is not a minimizer, and the
/// angular slack is >= -kAngleTol.  Every attainable point passes.
bool in_outer(const ProblemInstance& inst, const Vec& x);

/// Inner test: strict slack > kAngleTol inside the closed balls (or the
/// special single point at the singleton threshold).  Every point passing
/// is attainable and admits an explicit witness pair.
bool in_inner(const ProblemInstance& inst, const Vec& x);

/// Evaluates the exact regime decomposition at x with tolerance `tol`
/// (distance units for balls/cusps/junction seams; radians for the curve
/// band |slack| <= tol).
Membership classify(const ProblemInstance& inst, const Vec& x,
                    double tol = kDefaultClassifyTol);

/// Signed residual of the implicit curve equation at x:
///   (|z|^2 - r^2)/(d1^2 d2^2) + sigma1 sigma2 / L^2
///     - sqrt(1/d1^2 - sigma1^2/L^2) * sqrt(1/d2^2 - sigma2^2/L^2)
/// in canonical coordinates z; negative strictly inside, positive outside,
/// zero exactly on the curve.  Small negative radicands are clamped to 0;
/// beyond tolerance (point outside a ball) throws OutOfDomain, as does
/// evaluation at a minimizer.
double t_residual(const ProblemInstance& inst, const Vec& x);

enum class SegmentKind { CurveT, Arc1, Arc2, IsolatedPoint };

/// One traced boundary piece.  Curve pieces are polylines in the caller's
/// coordinates; isolated points carry a single vertex.  `closed` marks a
/// polyline whose last vertex connects back to the first.
struct TraceSegment {
  SegmentKind kind = SegmentKind::CurveT;
  std::vector<std::array<double, 2>> points;
  bool closed = false;
};

struct BoundaryTrace {
  RegimeCase kind = RegimeCase::Empty;
  int samples = 0;  ///< resolution per curve segment
  std::vector<TraceSegment> segments;
};

/// Traces the region boundary for 2-D instances (UnsupportedDimension
/// otherwise).  Curve pieces are found by sweeping the axis coordinate on a
/// uniform grid and bisecting the slack function vertically (valid on the
/// inter-minimizer band by the vertical monotonicity of the slack sign);
/// arcs are sampled exactly on their circles; junction endpoints are placed
/// at the closed-form (lambda_i, nu_i).
BoundaryTrace trace_boundary(const ProblemInstance& inst, int samples = 512);

// Stable names, used in JSON/CSV output and log messages.
std::string to_string(RegimeCase c);
std::string to_string(Location l);
std::string to_string(BoundaryPiece p);
std::string to_string(SegmentKind k);

}  // namespace minregion
