#include "minregion/geometry.hpp"

#include <cmath>
#include <limits>

namespace minregion {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Relative slop on sigma*d/L <= 1 before a point counts as outside a ball;
// absorbs rounding for points generated exactly on a ball sphere.
constexpr double kBallSlop = 1e-12;

bool all_finite(const Vec& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

ProblemInstance::ProblemInstance(Vec x1, Vec x2, double s1, double s2,
                                 double grad_bound)
    : x1_star(std::move(x1)),
      x2_star(std::move(x2)),
      sigma1(s1),
      sigma2(s2),
      L(grad_bound) {
  if (x1_star.size() != x2_star.size())
    throw InvalidInput("ProblemInstance: minimizer dimensions differ");
  if (x1_star.size() < 2)
    throw InvalidInput("ProblemInstance: dimension must be >= 2");
  if (!all_finite(x1_star) || !all_finite(x2_star))
    throw InvalidInput("ProblemInstance: minimizers must be finite");
  if (!std::isfinite(sigma1) || sigma1 <= 0.0)
    throw InvalidInput("ProblemInstance: sigma1 must be positive and finite");
  if (!std::isfinite(sigma2) || sigma2 <= 0.0)
    throw InvalidInput("ProblemInstance: sigma2 must be positive and finite");
  if (!std::isfinite(L) || L <= 0.0)
    throw InvalidInput("ProblemInstance: L must be positive and finite");
}

CanonicalFrame canonical_frame(const ProblemInstance& inst) {
  const std::size_t n = inst.dim();
  CanonicalFrame f;
  f.swapped = inst.sigma2 > inst.sigma1;
  const Vec& lo = f.swapped ? inst.x2_star : inst.x1_star;  // goes to -r
  const Vec& hi = f.swapped ? inst.x1_star : inst.x2_star;  // goes to +r
  f.b = scale(0.5, add(lo, hi));
  f.r = 0.5 * distance(lo, hi);
  if (f.r <= kMinimizerSnap * std::max(1.0, f.r)) {
    f.r = 0.0;
    f.E = Mat::identity(n);
    return f;
  }
  const Vec axis = scale(1.0 / (2.0 * f.r), sub(hi, lo));
  f.E = complete_orthonormal_basis({axis}, n);
  return f;
}

Vec to_canonical(const CanonicalFrame& f, const Vec& x) {
  if (x.size() != f.b.size())
    throw InvalidInput("to_canonical: dimension mismatch");
  return matvec(transpose(f.E), sub(x, f.b));
}

Vec from_canonical(const CanonicalFrame& f, const Vec& z) {
  if (z.size() != f.b.size())
    throw InvalidInput("from_canonical: dimension mismatch");
  return add(matvec(f.E, z), f.b);
}

AngleReport angle_report(const ProblemInstance& inst, const Vec& x) {
  if (x.size() != inst.dim())
    throw InvalidInput("angle_report: dimension mismatch");
  AngleReport rep;
  rep.d1 = distance(x, inst.x1_star);
  rep.d2 = distance(x, inst.x2_star);

  const double r = 0.5 * distance(inst.x1_star, inst.x2_star);
  const double snap = kMinimizerSnap * std::max(1.0, r);
  const double c1 = inst.sigma1 * rep.d1 / inst.L;
  const double c2 = inst.sigma2 * rep.d2 / inst.L;
  const bool at_minimizer = rep.d1 <= snap || rep.d2 <= snap;
  const bool outside = c1 > 1.0 + kBallSlop || c2 > 1.0 + kBallSlop;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (at_minimizer || outside) {
    rep.defined = false;
    rep.phi1 = rep.phi2 = rep.alpha1 = rep.alpha2 = rep.psi = rep.slack = nan;
    return rep;
  }

  rep.phi1 = std::acos(std::min(c1, 1.0));
  rep.phi2 = std::acos(std::min(c2, 1.0));
  if (r <= kMinimizerSnap * std::max(1.0, r)) {
    // Coincident minimizers: both point-to-minimizer directions agree, so
    // the axis angles are equal and the reversed-axis angle is exactly pi.
    rep.alpha1 = rep.alpha2 = 0.5 * kPi;
    rep.psi = kPi;
  } else {
    // Axis coordinates in the frame whose first axis runs x1* -> x2*.
    const Vec axis = scale(0.5 / r, sub(inst.x2_star, inst.x1_star));
    const Vec w = sub(x, inst.x1_star);
    const double along1 = dot(w, axis);
    const double along2 = along1 - 2.0 * r;
    const Vec perp = axpy(w, -along1, axis);
    const double t = norm(perp);
    rep.alpha1 = std::atan2(t, along1);
    rep.alpha2 = std::atan2(t, along2);
    rep.psi = kPi - (rep.alpha2 - rep.alpha1);
  }
  rep.slack = rep.phi1 + rep.phi2 - rep.psi;
  rep.defined = true;
  return rep;
}

}  // namespace minregion
