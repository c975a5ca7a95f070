#include "minregion/region.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace minregion {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kBallSlop = 1e-12;  // relative slop on sigma*d/L at spheres

// Sorted-labeling view: index 1 carries the larger strong-convexity
// parameter, matching the labeling the closed-form constants assume.
struct Sorted {
  double s1, s2;  // s1 >= s2
  double R1, R2;  // ball radii L/sigma, R1 <= R2
};

Sorted sorted_sigmas(const ProblemInstance& inst) {
  Sorted s;
  s.s1 = std::max(inst.sigma1, inst.sigma2);
  s.s2 = std::min(inst.sigma1, inst.sigma2);
  s.R1 = inst.L / s.s1;
  s.R2 = inst.L / s.s2;
  return s;
}

// Angular slack at canonical point (z1, t), t >= 0, in sorted labeling
// (minimizer of the stiffer function at (-r, 0)).  nullopt when undefined
// (at a minimizer or outside a ball).
std::optional<double> slack_canonical(double z1, double t, double r,
                                      const Sorted& s, double L) {
  const double a1 = z1 + r, a2 = z1 - r;
  const double d1 = std::hypot(a1, t), d2 = std::hypot(a2, t);
  const double snap = kMinimizerSnap * std::max(1.0, r);
  if (d1 <= snap || d2 <= snap) return std::nullopt;
  const double c1 = s.s1 * d1 / L, c2 = s.s2 * d2 / L;
  if (c1 > 1.0 + kBallSlop || c2 > 1.0 + kBallSlop) return std::nullopt;
  const double phi1 = std::acos(std::min(c1, 1.0));
  const double phi2 = std::acos(std::min(c2, 1.0));
  const double psi = kPi - (std::atan2(t, a2) - std::atan2(t, a1));
  return phi1 + phi2 - psi;
}

BoundaryPiece map_piece(BoundaryPiece sorted_piece, bool swapped) {
  if (!swapped) return sorted_piece;
  switch (sorted_piece) {
    case BoundaryPiece::Arc1: return BoundaryPiece::Arc2;
    case BoundaryPiece::Arc2: return BoundaryPiece::Arc1;
    case BoundaryPiece::CuspX1: return BoundaryPiece::CuspX2;
    case BoundaryPiece::CuspX2: return BoundaryPiece::CuspX1;
    default: return sorted_piece;
  }
}

}  // namespace

RegionRegime regime(const ProblemInstance& inst) {
  const CanonicalFrame frame = canonical_frame(inst);
  const Sorted s = sorted_sigmas(inst);
  const double r = frame.r, L = inst.L;

  RegionRegime reg;
  reg.r = r;
  reg.gamma1 = (L / s.s1) * (L / s.s1);
  reg.gamma2 = (L / s.s2) * (L / s.s2);
  reg.beta = s.s2 / s.s1;
  reg.thresh_arc1 = 0.5 * L / s.s1;
  reg.thresh_arc2 = 0.5 * L / s.s2;
  reg.thresh_singleton = 0.5 * L * (1.0 / s.s1 + 1.0 / s.s2);

  const double tau = kRadiusTol * (1.0 + r);
  if (r <= reg.thresh_arc1 + tau) {
    reg.kind = RegimeCase::TwoCusps;
  } else if (r <= reg.thresh_arc2 + tau) {
    reg.kind = RegimeCase::OneCusp;
  } else if (std::abs(r - reg.thresh_singleton) <= tau) {
    reg.kind = RegimeCase::Singleton;
  } else if (r < reg.thresh_singleton) {
    reg.kind = RegimeCase::ThreeArcs;
  } else {
    reg.kind = RegimeCase::Empty;
  }

  if (r > 0.0) {
    const double beta = reg.beta;
    const double q1 = reg.gamma1 / (r * r), q2 = reg.gamma2 / (r * r);
    reg.lambda1 = (1.0 + beta) / (1.0 + 2.0 * beta) * reg.gamma1 / (2.0 * r) -
                  r / (1.0 + 2.0 * beta);
    reg.lambda2 = -(1.0 + beta) / (2.0 + beta) * reg.gamma2 / (2.0 * r) +
                  beta * r / (2.0 + beta);
    const bool nu1_exists = reg.kind == RegimeCase::OneCusp ||
                            reg.kind == RegimeCase::ThreeArcs ||
                            reg.kind == RegimeCase::Singleton;
    const bool nu2_exists = reg.kind == RegimeCase::ThreeArcs ||
                            reg.kind == RegimeCase::Singleton;
    if (nu1_exists) {
      const double rad =
          -(q1 - 4.0) * ((1.0 + beta) * (1.0 + beta) * q1 - 4.0 * beta * beta);
      reg.nu1 = r / (2.0 * (1.0 + 2.0 * beta)) * std::sqrt(std::max(rad, 0.0));
    }
    if (nu2_exists) {
      const double rad =
          -(q2 - 4.0) * ((1.0 + beta) * (1.0 + beta) * q2 - 4.0);
      reg.nu2 = r / (2.0 * (2.0 + beta)) * std::sqrt(std::max(rad, 0.0));
    }
  }
  return reg;
}

Vec singleton_point(const ProblemInstance& inst) {
  const RegionRegime reg = regime(inst);
  if (reg.kind != RegimeCase::Singleton)
    throw OutOfDomain("singleton_point: regime is not Singleton");
  const CanonicalFrame frame = canonical_frame(inst);
  const Sorted s = sorted_sigmas(inst);
  Vec z(inst.dim(), 0.0);
  z[0] = 0.5 * inst.L * (1.0 / s.s1 - 1.0 / s.s2);
  return from_canonical(frame, z);
}

bool in_outer(const ProblemInstance& inst, const Vec& x) {
  const AngleReport rep = angle_report(inst, x);
  return rep.defined && rep.slack >= -kAngleTol;
}

bool in_inner(const ProblemInstance& inst, const Vec& x) {
  const AngleReport rep = angle_report(inst, x);
  if (rep.defined && rep.slack > kAngleTol) return true;
  const RegionRegime reg = regime(inst);
  if (reg.kind == RegimeCase::Singleton) {
    const double tol = kRadiusTol * (1.0 + reg.r);
    return distance(x, singleton_point(inst)) <= tol;
  }
  return false;
}

Membership classify(const ProblemInstance& inst, const Vec& x, double tol) {
  if (x.size() != inst.dim())
    throw InvalidInput("classify: dimension mismatch");
  if (!(tol > 0.0)) throw InvalidInput("classify: tol must be positive");

  const RegionRegime reg = regime(inst);
  if (reg.kind == RegimeCase::Empty) return {Location::Exterior, BoundaryPiece::None};
  if (reg.kind == RegimeCase::Singleton) {
    if (distance(x, singleton_point(inst)) <= tol)
      return {Location::Boundary, BoundaryPiece::SingletonPoint};
    return {Location::Exterior, BoundaryPiece::None};
  }

  const CanonicalFrame frame = canonical_frame(inst);
  const Sorted s = sorted_sigmas(inst);
  // Sorted-label minimizers: index 1 is the stiffer function's.
  const Vec& m1 = frame.swapped ? inst.x2_star : inst.x1_star;
  const Vec& m2 = frame.swapped ? inst.x1_star : inst.x2_star;
  const double d1 = distance(x, m1), d2 = distance(x, m2);

  if (d1 > s.R1 + tol || d2 > s.R2 + tol)
    return {Location::Exterior, BoundaryPiece::None};

  // Cusps sit at the minimizers still contained in the other ball:
  // both of them in TwoCusps, only the stiffer one's in OneCusp.
  if (reg.kind == RegimeCase::TwoCusps || reg.kind == RegimeCase::OneCusp) {
    if (d1 <= tol)
      return {Location::Boundary, map_piece(BoundaryPiece::CuspX1, frame.swapped)};
    if (reg.kind == RegimeCase::TwoCusps && d2 <= tol)
      return {Location::Boundary, map_piece(BoundaryPiece::CuspX2, frame.swapped)};
  }

  const AngleReport rep = angle_report(inst, x);
  // Junction-adjacent points prefer the curve tag: the junctions lie on it.
  if (rep.defined && std::abs(rep.slack) <= tol)
    return {Location::Boundary, BoundaryPiece::CurveT};

  const double z1 = to_canonical(frame, x)[0];
  const bool has_arc1 = reg.kind == RegimeCase::OneCusp ||
                        reg.kind == RegimeCase::ThreeArcs;
  if (has_arc1 && std::abs(d1 - s.R1) <= tol && reg.lambda1 &&
      z1 >= *reg.lambda1 - tol)
    return {Location::Boundary, map_piece(BoundaryPiece::Arc1, frame.swapped)};
  if (reg.kind == RegimeCase::ThreeArcs && std::abs(d2 - s.R2) <= tol &&
      reg.lambda2 && z1 <= *reg.lambda2 + tol)
    return {Location::Boundary, map_piece(BoundaryPiece::Arc2, frame.swapped)};

  if (!rep.defined) return {Location::Exterior, BoundaryPiece::None};
  if (rep.slack > tol) return {Location::Interior, BoundaryPiece::None};
  return {Location::Exterior, BoundaryPiece::None};
}

double t_residual(const ProblemInstance& inst, const Vec& x) {
  if (x.size() != inst.dim())
    throw InvalidInput("t_residual: dimension mismatch");
  const double d1 = distance(x, inst.x1_star);
  const double d2 = distance(x, inst.x2_star);
  const double r = 0.5 * distance(inst.x1_star, inst.x2_star);
  const double snap = kMinimizerSnap * std::max(1.0, r);
  if (d1 <= snap || d2 <= snap)
    throw OutOfDomain("t_residual: undefined at a minimizer");
  const double w1 = inst.sigma1 / inst.L, w2 = inst.sigma2 / inst.L;
  double q1 = 1.0 / (d1 * d1) - w1 * w1;
  double q2 = 1.0 / (d2 * d2) - w2 * w2;
  if (q1 < -1e-9 * w1 * w1 || q2 < -1e-9 * w2 * w2)
    throw OutOfDomain("t_residual: point outside an admissible ball");
  q1 = std::max(q1, 0.0);
  q2 = std::max(q2, 0.0);
  const Vec mid = scale(0.5, add(inst.x1_star, inst.x2_star));
  const double zsq = dot(sub(x, mid), sub(x, mid));
  return (zsq - r * r) / (d1 * d1 * d2 * d2) + w1 * w2 -
         std::sqrt(q1) * std::sqrt(q2);
}

namespace {

// Height of the zero-slack crossing above (z1, 0); the slack sign is
// monotone in t on the inter-minimizer band, so plain bisection brackets it.
double curve_height(double z1, double r, const Sorted& s, double L) {
  const double h1sq = s.R1 * s.R1 - (z1 + r) * (z1 + r);
  const double h2sq = s.R2 * s.R2 - (z1 - r) * (z1 - r);
  double hi = std::sqrt(std::max(0.0, std::min(h1sq, h2sq)));
  if (hi <= 0.0) return 0.0;
  const auto f = [&](double t) {
    const auto v = slack_canonical(z1, t, r, s, L);
    return v ? *v : -1.0;  // outside a ball counts as past the boundary
  };
  if (f(hi) > 0.0) return hi;  // band edge: ball sphere reached first
  double lo = 0.0;
  for (int it = 0; it < 90; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

BoundaryTrace trace_boundary(const ProblemInstance& inst, int samples) {
  if (inst.dim() != 2)
    throw UnsupportedDimension("trace_boundary: only implemented for n = 2");
  samples = std::max(samples, 2);

  const RegionRegime reg = regime(inst);
  const CanonicalFrame frame = canonical_frame(inst);
  const Sorted s = sorted_sigmas(inst);
  const double r = frame.r, L = inst.L;

  BoundaryTrace tr;
  tr.kind = reg.kind;
  tr.samples = samples;
  if (reg.kind == RegimeCase::Empty) return tr;

  const auto emit = [&](double z1, double t) -> std::array<double, 2> {
    const Vec p = from_canonical(frame, {z1, t});
    return {p[0], p[1]};
  };
  const SegmentKind arc1_kind = frame.swapped ? SegmentKind::Arc2 : SegmentKind::Arc1;
  const SegmentKind arc2_kind = frame.swapped ? SegmentKind::Arc1 : SegmentKind::Arc2;

  if (reg.kind == RegimeCase::Singleton) {
    const Vec p = singleton_point(inst);
    TraceSegment seg;
    seg.kind = SegmentKind::IsolatedPoint;
    seg.points.push_back({p[0], p[1]});
    tr.segments.push_back(std::move(seg));
    return tr;
  }

  // Sampled heights of the curve over a uniform z1-grid on [a, b]; the
  // endpoint heights ta/tb are pinned exactly (cusp or junction).
  const auto curve_half = [&](double a, double b, double ta, double tb) {
    std::vector<std::array<double, 2>> pts;
    pts.reserve(static_cast<std::size_t>(samples) + 1);
    for (int k = 0; k <= samples; ++k) {
      const double z1 = a + (b - a) * k / samples;
      double t;
      if (k == 0)
        t = ta;
      else if (k == samples)
        t = tb;
      else
        t = curve_height(z1, r, s, L);
      pts.push_back(emit(z1, t));
    }
    return pts;
  };

  const auto arc_segment = [&](double cx, double radius, double th_from,
                               double th_to, SegmentKind kind,
                               std::array<double, 2> exact_from,
                               std::array<double, 2> exact_to) {
    TraceSegment seg;
    seg.kind = kind;
    seg.points.reserve(static_cast<std::size_t>(samples) + 1);
    for (int k = 0; k <= samples; ++k) {
      if (k == 0) {
        seg.points.push_back(exact_from);
        continue;
      }
      if (k == samples) {
        seg.points.push_back(exact_to);
        continue;
      }
      const double th = th_from + (th_to - th_from) * k / samples;
      seg.points.push_back(
          emit(cx + radius * std::cos(th), radius * std::sin(th)));
    }
    return seg;
  };

  const auto isolated = [&](double z1, double t) {
    TraceSegment seg;
    seg.kind = SegmentKind::IsolatedPoint;
    seg.points.push_back(emit(z1, t));
    return seg;
  };

  if (reg.kind == RegimeCase::TwoCusps) {
    // One closed loop through both cusps: upper half left-to-right, then
    // the mirrored lower half back.
    TraceSegment loop;
    loop.kind = SegmentKind::CurveT;
    loop.closed = true;
    loop.points = curve_half(-r, r, 0.0, 0.0);
    for (int k = samples - 1; k >= 1; --k) {
      const double z1 = -r + 2.0 * r * k / samples;
      loop.points.push_back(emit(z1, -curve_height(z1, r, s, L)));
    }
    tr.segments.push_back(std::move(loop));
    tr.segments.push_back(isolated(-r, 0.0));
    tr.segments.push_back(isolated(r, 0.0));
    return tr;
  }

  const double l1 = *reg.lambda1, n1 = *reg.nu1;
  const double th1 = std::atan2(n1, l1 + r);

  if (reg.kind == RegimeCase::OneCusp) {
    // Curve from the upper junction through the cusp to the lower junction.
    TraceSegment curve;
    curve.kind = SegmentKind::CurveT;
    curve.points = curve_half(l1, -r, n1, 0.0);
    for (int k = 1; k <= samples; ++k) {
      const double z1 = -r + (l1 + r) * k / samples;
      const double t = k == samples ? n1 : curve_height(z1, r, s, L);
      curve.points.push_back(emit(z1, -t));
    }
    tr.segments.push_back(std::move(curve));
    tr.segments.push_back(arc_segment(-r, s.R1, -th1, th1, arc1_kind,
                                      emit(l1, -n1), emit(l1, n1)));
    tr.segments.push_back(isolated(-r, 0.0));
    return tr;
  }

  // ThreeArcs: curve band between the junction verticals, both halves,
  // plus the two ball-sphere caps.
  const double l2 = *reg.lambda2, n2 = *reg.nu2;
  const double th2 = std::atan2(n2, l2 - r);  // in (pi/2, pi)

  TraceSegment upper;
  upper.kind = SegmentKind::CurveT;
  upper.points = curve_half(l2, l1, n2, n1);
  TraceSegment lower;
  lower.kind = SegmentKind::CurveT;
  lower.points.reserve(upper.points.size());
  for (int k = 0; k <= samples; ++k) {
    const double z1 = l2 + (l1 - l2) * k / samples;
    double t;
    if (k == 0)
      t = n2;
    else if (k == samples)
      t = n1;
    else
      t = curve_height(z1, r, s, L);
    lower.points.push_back(emit(z1, -t));
  }
  tr.segments.push_back(std::move(upper));
  tr.segments.push_back(std::move(lower));
  tr.segments.push_back(arc_segment(-r, s.R1, -th1, th1, arc1_kind,
                                    emit(l1, -n1), emit(l1, n1)));
  tr.segments.push_back(arc_segment(r, s.R2, th2, 2.0 * kPi - th2, arc2_kind,
                                    emit(l2, n2), emit(l2, -n2)));
  return tr;
}

std::string to_string(RegimeCase c) {
  switch (c) {
    case RegimeCase::TwoCusps: return "two_cusps";
    case RegimeCase::OneCusp: return "one_cusp";
    case RegimeCase::ThreeArcs: return "three_arcs";
    case RegimeCase::Singleton: return "singleton";
    case RegimeCase::Empty: return "empty";
  }
  return "unknown";
}

std::string to_string(Location l) {
  switch (l) {
    case Location::Interior: return "interior";
    case Location::Boundary: return "boundary";
    case Location::Exterior: return "exterior";
  }
  return "unknown";
}

std::string to_string(BoundaryPiece p) {
  switch (p) {
    case BoundaryPiece::None: return "none";
    case BoundaryPiece::CurveT: return "curve_t";
    case BoundaryPiece::Arc1: return "arc1";
    case BoundaryPiece::Arc2: return "arc2";
    case BoundaryPiece::CuspX1: return "cusp_x1";
    case BoundaryPiece::CuspX2: return "cusp_x2";
    case BoundaryPiece::SingletonPoint: return "singleton_point";
  }
  return "unknown";
}

std::string to_string(SegmentKind k) {
  switch (k) {
    case SegmentKind::CurveT: return "curve_t";
    case SegmentKind::Arc1: return "arc1";
    case SegmentKind::Arc2: return "arc2";
    case SegmentKind::IsolatedPoint: return "isolated_point";
  }
  return "unknown";
}

}  // namespace minregion
