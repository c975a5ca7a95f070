// Quadratic model validation, closed-form Hessian construction from a
// prescribed gradient, and the witness-pair pipeline built on top of it.
#include "minregion/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "minregion/errors.hpp"
#include "minregion/region.hpp"

namespace minregion {

namespace {

bool all_finite(const Vec& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

QuadraticFunction::QuadraticFunction(Mat q, Vec lin, double cst)
    : Q(std::move(q)), b(std::move(lin)), c(cst) {
  const std::size_t n = b.size();
  if (n == 0 || Q.rows() != n || Q.cols() != n)
    throw InvalidInput("quadratic: Q must be square and match b in size");
  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(Q(i, j)))
        throw InvalidInput("quadratic: Q entries must be finite");
      scale = std::max(scale, std::abs(Q(i, j)));
    }
  if (!all_finite(b) || !std::isfinite(c))
    throw InvalidInput("quadratic: b and c must be finite");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(Q(i, j) - Q(j, i)) > 1e-12 * scale)
        throw InvalidInput("quadratic: Q must be symmetric");
  if (!(min_eigenvalue(Q) > 0.0))
    throw InvalidInput("quadratic: Q must be positive definite");
}

double eval(const QuadraticFunction& f, const Vec& x) {
  if (x.size() != f.dim()) throw InvalidInput("eval: dimension mismatch");
  const Vec qx = matvec(f.Q, x);
  return 0.5 * dot(x, qx) + dot(f.b, x) + f.c;
}

Vec grad(const QuadraticFunction& f, const Vec& x) {
  if (x.size() != f.dim()) throw InvalidInput("grad: dimension mismatch");
  Vec g = matvec(f.Q, x);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] += f.b[i];
  return g;
}

Vec minimizer(const QuadraticFunction& f) {
  return solve_spd(f.Q, scale(-1.0, f.b));
}

Vec sum_minimizer(const QuadraticFunction& f1, const QuadraticFunction& f2) {
  if (f1.dim() != f2.dim())
    throw InvalidInput("sum_minimizer: dimension mismatch");
  const std::size_t n = f1.dim();
  Mat s(n, n);
  Vec rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = -(f1.b[i] + f2.b[i]);
    for (std::size_t j = 0; j < n; ++j) s(i, j) = f1.Q(i, j) + f2.Q(i, j);
  }
  return solve_spd(s, rhs);
}

AngleRange admissible_angles(const Vec& x_star, const Vec& x0, double sigma,
                             double L) {
  if (x_star.size() != x0.size())
    throw InvalidInput("admissible_angles: dimension mismatch");
  if (!(sigma > 0.0) || !std::isfinite(sigma) || !(L > 0.0) ||
      !std::isfinite(L))
    throw InvalidInput("admissible_angles: sigma and L must be positive");
  const double d = distance(x_star, x0);
  if (d <= kMinimizerSnap)
    throw InvalidInput("admissible_angles: x0 coincides with the minimizer");
  const double sd = sigma * d;
  if (std::abs(sd - L) <= 1e-9 * std::max(1.0, L))
    return {AngleRange::ZeroOnly, 0.0};
  if (sd > L) return {AngleRange::Empty, 0.0};
  return {AngleRange::HalfOpen, std::acos(std::clamp(sd / L, -1.0, 1.0))};
}

QuadraticFunction construct_quadratic_2d(const Vec& x_star, const Vec& x0,
                                         const Vec& g, double sigma) {
  if (x_star.size() != 2 || x0.size() != 2 || g.size() != 2)
    throw UnsupportedDimension("construct_quadratic_2d expects 2-D inputs");
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw InvalidInput("construct_quadratic_2d: sigma must be positive");
  const double v1 = x0[0] - x_star[0];
  const double v2 = x0[1] - x_star[1];
  const double d = std::hypot(v1, v2);
  if (d <= kMinimizerSnap)
    throw InvalidInput(
        "construct_quadratic_2d: x0 coincides with the minimizer");
  const double gn = std::hypot(g[0], g[1]);
  const double sd = sigma * d;
  if (!(gn > 0.0) || sd > gn * (1.0 + 1e-12) + 1e-15)
    throw Infeasible(
        1, "construct_quadratic_2d: sigma*|x0-x_star| exceeds the gradient "
           "norm, no such quadratic exists");
  const double lhat = gn / d;
  const double sphi = (g[1] * v1 - g[0] * v2) / (gn * d);
  const double cphi = (g[0] * v1 + g[1] * v2) / (gn * d);
  const double phi = std::atan2(sphi, cphi);
  Mat p(2, 2);
  if (std::abs(sd - gn) <= 1e-9 * std::max(1.0, gn) &&
      std::abs(phi) <= kAngleTol) {
    // Equality case: the gradient bound is tight and the gradient runs along
    // x0 - x_star, forcing the isotropic quadratic.
    p(0, 0) = p(1, 1) = sigma;
    p(0, 1) = p(1, 0) = 0.0;
  } else {
    const double phimax = std::acos(std::clamp(sd / gn, -1.0, 1.0));
    if (std::abs(phi) >= phimax - 1e-12)
      throw Infeasible(
          2, "construct_quadratic_2d: gradient angle reaches the admissible "
             "bound arccos(sigma*d/|g|)");
    const double den = lhat * cphi - sigma;  // > 0 strictly inside the cone
    const double d2 = d * d;
    const double sp = sphi / std::hypot(sphi, cphi);  // == sin(phi)
    const double cp = cphi / std::hypot(sphi, cphi);  // == cos(phi)
    const double p11 =
        (sigma * v2 * v2 - 2.0 * lhat * v1 * v2 * sp + lhat * v1 * v1 * cp) /
            d2 +
        (lhat * v2 * sp) * (lhat * v2 * sp) / (d2 * den);
    const double p22 =
        (sigma * v1 * v1 + 2.0 * lhat * v1 * v2 * sp + lhat * v2 * v2 * cp) /
            d2 +
        (lhat * v1 * sp) * (lhat * v1 * sp) / (d2 * den);
    const double p12 =
        (2.0 * lhat * v1 * v2 * cp + lhat * (v1 * v1 - v2 * v2) * sp) / d2 -
        (lhat * lhat - sigma * sigma) * v1 * v2 / (d2 * den);
    p(0, 0) = p11;
    p(1, 1) = p22;
    p(0, 1) = p(1, 0) = p12;
  }
  Vec b = {-(p(0, 0) * x_star[0] + p(0, 1) * x_star[1]),
           -(p(1, 0) * x_star[0] + p(1, 1) * x_star[1])};
  const double c = -0.5 * (b[0] * x_star[0] + b[1] * x_star[1]);
  return QuadraticFunction(std::move(p), std::move(b), c);
}

QuadraticFunction construct_quadratic(const Vec& x_star, const Vec& x0,
                                      const Vec& g, double sigma) {
  const std::size_t n = x_star.size();
  if (x0.size() != n || g.size() != n)
    throw InvalidInput("construct_quadratic: dimension mismatch");
  if (n < 2)
    throw UnsupportedDimension("construct_quadratic requires dimension >= 2");
  const Vec v = sub(x0, x_star);
  const double d = norm(v);
  if (d <= kMinimizerSnap)
    throw InvalidInput("construct_quadratic: x0 coincides with the minimizer");
  const Vec e1 = scale(1.0 / d, v);
  const double g_along = dot(g, e1);
  Vec w = axpy(g, -g_along, e1);
  const double wn = norm(w);
  Vec e2;
  if (wn > 1e-12 * std::max(1.0, norm(g))) {
    e2 = scale(1.0 / wn, w);
  } else {
    // Gradient parallel to x0 - x_star: any completion direction works.
    const Mat basis = complete_orthonormal_basis({e1}, n);
    e2.resize(n);
    for (std::size_t i = 0; i < n; ++i) e2[i] = basis(i, 1);
  }
  const QuadraticFunction planar = construct_quadratic_2d(
      {0.0, 0.0}, {d, 0.0}, {g_along, dot(g, e2)}, sigma);
  // Q = sigma * I + E (P - sigma I) E^T keeps the orthogonal complement at
  // exactly sigma regardless of rounding in E.
  const double a00 = planar.Q(0, 0) - sigma;
  const double a01 = planar.Q(0, 1);
  const double a11 = planar.Q(1, 1) - sigma;
  Mat q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double entry = (i == j) ? sigma : 0.0;
      entry += e1[i] * (a00 * e1[j] + a01 * e2[j]) +
               e2[i] * (a01 * e1[j] + a11 * e2[j]);
      q(i, j) = q(j, i) = entry;
    }
  Vec b = scale(-1.0, matvec(q, x_star));
  const double c = -0.5 * dot(b, x_star);
  return QuadraticFunction(std::move(q), std::move(b), c);
}

namespace {

// Admissible window for the signed rotation t of the witness gradient away
// from u1 = (x - x1*)/d1 toward the opposite cone axis: |t| must stay inside
// the first cone's half-angle and |psi - t| inside the second's.
struct AngleWindow {
  double lo = 0.0, hi = 0.0, t = 0.0;
  bool pinned = false;  ///< a cone collapsed to its axis; t is forced
};

AngleWindow angle_window(double phi1, double phi2, double psi) {
  AngleWindow win;
  win.lo = std::max(psi - phi2, -phi1);
  win.hi = std::min(phi1, psi + phi2);
  const double width = win.hi - win.lo;
  if (width <= 0.0) {
    // A cone degenerated to the single angle 0 (the point sits exactly on
    // that circle); the axis direction itself remains admissible.
    win.t = (phi1 <= phi2) ? 0.0 : psi;
    win.pinned = true;
    return win;
  }
  const double mid = 0.5 * (psi - phi2 + phi1);
  win.t = std::clamp(mid, win.lo + 0.1 * width, win.hi - 0.1 * width);
  return win;
}

// Builds the shared gradient L*(cos(t) u1 + sin(t) w) and the two quadratics
// realizing it with the prescribed curvature floors.
WitnessPair pair_at_angle(const ProblemInstance& inst, const Vec& x,
                          double t) {
  const std::size_t n = inst.dim();
  const double d1 = distance(x, inst.x1_star);
  const double d2 = distance(x, inst.x2_star);
  const Vec u1 = scale(1.0 / d1, sub(x, inst.x1_star));
  const Vec mu2 = scale(1.0 / d2, sub(inst.x2_star, x));
  Vec w = axpy(mu2, -dot(mu2, u1), u1);
  const double wn = norm(w);
  if (wn > 1e-12) {
    w = scale(1.0 / wn, w);
  } else {
    // x lies on the minimizer axis; any perpendicular completes the plane.
    const Mat basis = complete_orthonormal_basis({u1}, n);
    for (std::size_t i = 0; i < n; ++i) w[i] = basis(i, 1);
  }
  Vec g(n);
  const double ct = std::cos(t), st = std::sin(t);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = inst.L * (ct * u1[i] + st * w[i]);
  QuadraticFunction f1 = construct_quadratic(inst.x1_star, x, g, inst.sigma1);
  QuadraticFunction f2 =
      construct_quadratic(inst.x2_star, x, scale(-1.0, g), inst.sigma2);
  return {std::move(f1), std::move(f2), std::move(g), x};
}

}  // namespace

WitnessPair witness_pair(const ProblemInstance& inst, const Vec& x) {
  if (x.size() != inst.dim())
    throw InvalidInput("witness_pair: dimension mismatch");
  if (!in_inner(inst, x))
    throw NotInInner("witness_pair: point is not in the guaranteed region");
  const RegionRegime reg = regime(inst);
  if (reg.kind == RegimeCase::Singleton) {
    const Vec point = singleton_point(inst);
    if (distance(x, point) <= kRadiusTol * (1.0 + reg.r)) {
      // Threshold point: both gradient cones collapse to the minimizer axis
      // and each quadratic degenerates to sigma_i * I.
      const double d1 = distance(point, inst.x1_star);
      const Vec u1 = scale(1.0 / d1, sub(point, inst.x1_star));
      const Vec g = scale(inst.L, u1);
      QuadraticFunction f1 =
          construct_quadratic(inst.x1_star, point, g, inst.sigma1);
      QuadraticFunction f2 = construct_quadratic(inst.x2_star, point,
                                                 scale(-1.0, g), inst.sigma2);
      return {std::move(f1), std::move(f2), g, point};
    }
  }
  const AngleReport rep = angle_report(inst, x);
  const AngleWindow win = angle_window(rep.phi1, rep.phi2, rep.psi);
  return pair_at_angle(inst, x, win.t);
}

std::vector<WitnessPair> witness_family(const ProblemInstance& inst,
                                        const Vec& x, int k) {
  if (k < 1) throw InvalidInput("witness_family: k must be >= 1");
  if (x.size() != inst.dim())
    throw InvalidInput("witness_family: dimension mismatch");
  if (!in_inner(inst, x))
    throw NotInInner("witness_family: point is not in the guaranteed region");
  if (k == 1) return {witness_pair(inst, x)};
  const AngleReport rep = angle_report(inst, x);
  const double margin = rep.defined ? rep.slack : 0.0;
  if (!(margin > 1e-6))
    throw InsufficientMargin(
        "witness_family: slack margin below 1e-6, cannot vary the gradient");
  const AngleWindow win = angle_window(rep.phi1, rep.phi2, rep.psi);
  const double room =
      win.pinned ? 0.0 : std::min(win.t - win.lo, win.hi - win.t);
  const double delta = std::min(margin / 4.0, 0.9 * room);
  if (!(delta > 0.0))
    throw InsufficientMargin(
        "witness_family: no angular room to produce distinct gradients");
  std::vector<WitnessPair> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    const double offset = -delta + 2.0 * delta * j / (k - 1);
    out.push_back(pair_at_angle(inst, x, win.t + offset));
  }
  return out;
}

}  // namespace minregion
