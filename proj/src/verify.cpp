// Monte-Carlo verification: random quadratic pairs against the classifier
// (soundness) and constructive witnesses at sampled interior points
// (completeness).  Deterministic per-trial RNG streams keep reports
// reproducible for a given seed.
#include "minregion/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "minregion/errors.hpp"

namespace minregion {

namespace {

constexpr double kPi = 3.14159265358979323846;

// One well-mixed 64-bit stream seed per (run seed, trial) pair, so trials
// are independent of each other and of trial count.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1p-53;
}

double gauss(std::mt19937_64& rng) {
  const double a = (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
  const double b = (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
  return std::sqrt(-2.0 * std::log(a)) * std::cos(2.0 * kPi * b);
}

}  // namespace

QuadraticFunction sample_quadratic(const Vec& x_star, double sigma, int n,
                                   double spread, std::mt19937_64& rng) {
  if (n < 2 || x_star.size() != static_cast<std::size_t>(n))
    throw InvalidInput("sample_quadratic: dimension mismatch");
  if (!(sigma > 0.0) || !(spread >= 0.0))
    throw InvalidInput("sample_quadratic: sigma must be positive, spread >= 0");
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<Vec> basis;
  for (int attempt = 0; attempt < 64 && basis.size() < un; ++attempt) {
    basis.clear();
    bool degenerate = false;
    for (std::size_t j = 0; j < un && !degenerate; ++j) {
      Vec v(un);
      for (std::size_t i = 0; i < un; ++i) v[i] = gauss(rng);
      for (int pass = 0; pass < 2; ++pass)
        for (const Vec& q : basis) {
          const double proj = dot(v, q);
          for (std::size_t i = 0; i < un; ++i) v[i] -= proj * q[i];
        }
      const double nv = norm(v);
      if (nv < 1e-8)
        degenerate = true;
      else
        basis.push_back(scale(1.0 / nv, v));
    }
  }
  if (basis.size() < un)
    throw SingularSystem("sample_quadratic: failed to draw a basis");
  Vec lam(un, sigma);
  for (std::size_t i = 1; i < un; ++i)
    lam[i] = sigma * (1.0 + spread * u01(rng));
  Mat q(un, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i; j < un; ++j) {
      double entry = 0.0;
      for (std::size_t k = 0; k < un; ++k)
        entry += basis[k][i] * lam[k] * basis[k][j];
      q(i, j) = q(j, i) = entry;
    }
  Vec b = scale(-1.0, matvec(q, x_star));
  return QuadraticFunction(std::move(q), std::move(b), 0.0);
}

VerificationReport mc_soundness(const ProblemInstance& inst,
                                std::uint64_t trials, double spread,
                                std::uint64_t seed, double tol) {
  if (!(spread >= 0.0)) throw InvalidInput("mc_soundness: spread must be >= 0");
  VerificationReport rep;
  rep.mode = "soundness";
  rep.seed = seed;
  rep.trials = trials;
  RegimeTally& tally = rep.by_regime[to_string(regime(inst).kind)];
  const std::size_t n = inst.dim();
  double worst = std::numeric_limits<double>::infinity();
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(mix_seed(seed, trial));
    ++tally.trials;
    const double sig1 = inst.sigma1 * (1.0 + spread * u01(rng));
    const double sig2 = inst.sigma2 * (1.0 + spread * u01(rng));
    const QuadraticFunction f1 =
        sample_quadratic(inst.x1_star, sig1, static_cast<int>(n), spread, rng);
    const QuadraticFunction f2 =
        sample_quadratic(inst.x2_star, sig2, static_cast<int>(n), spread, rng);
    const Vec xhat = sum_minimizer(f1, f2);
    if (norm(grad(f1, xhat)) > inst.L + 1e-12) continue;  // outside the class
    ++rep.accepted;
    ++tally.accepted;
    const Membership m = classify(inst, xhat, tol);
    if (m.location == Location::Exterior) {
      ++rep.violations;
      ++tally.violations;
    }
    const AngleReport ar = angle_report(inst, xhat);
    const double margin =
        ar.defined
            ? ar.slack
            : -(std::max(inst.sigma1 * ar.d1, inst.sigma2 * ar.d2) / inst.L -
                1.0);
    worst = std::min(worst, margin);
  }
  rep.worst_margin = rep.accepted > 0 ? worst : 0.0;
  return rep;
}

VerificationReport mc_completeness(const ProblemInstance& inst,
                                   std::uint64_t trials, std::uint64_t seed) {
  const RegionRegime reg = regime(inst);
  if (reg.kind == RegimeCase::Empty)
    throw RegionEmpty("mc_completeness: the region is empty at this L");
  VerificationReport rep;
  rep.mode = "completeness";
  rep.seed = seed;
  rep.trials = trials;
  RegimeTally& tally = rep.by_regime[to_string(reg.kind)];
  const std::size_t n = inst.dim();
  const CanonicalFrame frame = canonical_frame(inst);
  const double shi = std::max(inst.sigma1, inst.sigma2);
  const double slo = std::min(inst.sigma1, inst.sigma2);
  const double r1 = inst.L / shi, r2 = inst.L / slo;
  const double z1lo = std::max(-frame.r - r1, frame.r - r2);
  const double z1hi = std::min(-frame.r + r1, frame.r + r2);
  const double h = std::min(r1, r2);
  double worst = 0.0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(mix_seed(seed, trial));
    ++tally.trials;
    Vec x;
    if (reg.kind == RegimeCase::Singleton) {
      x = singleton_point(inst);
    } else {
      bool found = false;
      for (int attempt = 0; attempt < 10000 && !found; ++attempt) {
        Vec z(n);
        z[0] = z1lo + (z1hi - z1lo) * u01(rng);
        for (std::size_t i = 1; i < n; ++i) z[i] = h * (2.0 * u01(rng) - 1.0);
        Vec cand = from_canonical(frame, z);
        if (in_inner(inst, cand)) {
          x = std::move(cand);
          found = true;
        }
      }
      if (!found) {  // sampler starved: report it rather than hide it
        ++rep.violations;
        ++tally.violations;
        continue;
      }
    }
    ++rep.accepted;
    ++tally.accepted;
    bool bad = false;
    try {
      const WitnessPair w = witness_pair(inst, x);
      const double gn = norm(w.g);
      if (gn > inst.L + 1e-9) bad = true;
      if (min_eigenvalue(w.f1.Q) < inst.sigma1 - 1e-9) bad = true;
      if (min_eigenvalue(w.f2.Q) < inst.sigma2 - 1e-9) bad = true;
      const Vec g1 = grad(w.f1, w.point);
      const Vec g2 = grad(w.f2, w.point);
      const double e_pair = distance(g1, w.g) / (1.0 + gn);
      const double e_stat = norm(add(g1, g2)) / (1.0 + gn);
      const Vec xm = sum_minimizer(w.f1, w.f2);
      const double e_min = distance(xm, w.point) / (1.0 + norm(w.point));
      if (e_pair > 1e-9 || e_stat > 1e-9 || e_min > 1e-8) bad = true;
      worst = std::max({worst, e_pair, e_stat, e_min});
    } catch (const std::exception&) {
      bad = true;
    }
    if (bad) {
      ++rep.violations;
      ++tally.violations;
    }
  }
  rep.worst_margin = worst;
  return rep;
}

double fd_gradient_check(const QuadraticFunction& f, const Vec& x, double h) {
  if (x.size() != f.dim())
    throw InvalidInput("fd_gradient_check: dimension mismatch");
  if (!(h > 0.0)) throw InvalidInput("fd_gradient_check: h must be positive");
  const Vec g = grad(f, x);
  double worst = 0.0;
  Vec probe = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double up = eval(f, probe);
    probe[i] = x[i] - h;
    const double dn = eval(f, probe);
    probe[i] = x[i];
    worst = std::max(worst, std::abs((up - dn) / (2.0 * h) - g[i]));
  }
  return worst;
}

}  // namespace minregion
