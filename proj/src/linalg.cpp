#include "minregion/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace minregion {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidInput(what);
}

}  // namespace

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "dot: size mismatch");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "add: size mismatch");
  Vec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "sub: size mismatch");
  Vec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scale(double s, const Vec& a) {
  Vec out(a);
  for (double& v : out) v *= s;
  return out;
}

Vec axpy(const Vec& a, double s, const Vec& b) {
  require(a.size() == b.size(), "axpy: size mismatch");
  Vec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += s * b[i];
  return out;
}

double distance(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

Vec matvec(const Mat& m, const Vec& x) {
  require(m.cols() == x.size(), "matvec: size mismatch");
  Vec out(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

Mat matmul(const Mat& a, const Mat& b) {
  require(a.cols() == b.rows(), "matmul: size mismatch");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Mat transpose(const Mat& m) {
  Mat out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

Mat add_scaled_identity(Mat m, double s) {
  require(m.rows() == m.cols(), "add_scaled_identity: not square");
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += s;
  return m;
}

Vec solve_spd(Mat a, Vec rhs) {
  require(a.rows() == a.cols() && a.rows() == rhs.size(),
          "solve_spd: size mismatch");
  const std::size_t n = a.rows();
  // In-place Cholesky: a becomes lower-triangular L with A = L L^T.
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
    if (!(d > 0.0) || !std::isfinite(d))
      throw SingularSystem("solve_spd: matrix not positive definite");
    const double l = std::sqrt(d);
    a(j, j) = l;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
      a(i, j) = s / l;
    }
  }
  // Forward then backward substitution.
  Vec y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = rhs[i];
    for (std::size_t k = 0; k < i; ++k) s -= a(i, k) * y[k];
    y[i] = s / a(i, i);
  }
  Vec x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = y[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= a(k, ii) * x[k];
    x[ii] = s / a(ii, ii);
  }
  return x;
}

std::vector<double> symmetric_eigenvalues(Mat a) {
  require(a.rows() == a.cols(), "symmetric_eigenvalues: not square");
  const std::size_t n = a.rows();
  std::vector<double> ev;
  if (n == 0) return ev;
  if (n == 1) return {a(0, 0)};
  if (n == 2) {
    const double tr = a(0, 0) + a(1, 1);
    const double diff = a(0, 0) - a(1, 1);
    const double off = 0.5 * (a(0, 1) + a(1, 0));
    const double disc = std::sqrt(0.25 * diff * diff + off * off);
    return {0.5 * tr - disc, 0.5 * tr + disc};
  }
  // Cyclic Jacobi sweeps; dimensions here are tiny, so convergence is fast.
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
  const double tol = 1e-15 * std::max(scale, 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::abs(a(i, j)));
    if (off <= tol) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= tol) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  ev.resize(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

double min_eigenvalue(const Mat& a) { return symmetric_eigenvalues(a).front(); }

Mat complete_orthonormal_basis(const std::vector<Vec>& seeds, std::size_t n) {
  require(seeds.size() <= n, "complete_orthonormal_basis: too many seeds");
  for (const Vec& s : seeds)
    require(s.size() == n, "complete_orthonormal_basis: seed size mismatch");
  std::vector<Vec> cols(seeds);

  // Rank standard basis vectors by their projection onto the seed span and
  // skip the most aligned ones (one per seed); the rest fill the basis in
  // index order.
  std::vector<std::pair<double, std::size_t>> alignment(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (const Vec& v : seeds) s += v[i] * v[i];
    alignment[i] = {s, i};
  }
  std::stable_sort(alignment.begin(), alignment.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i + seeds.size() < n; ++i)
    chosen.push_back(alignment[i].second);
  std::sort(chosen.begin(), chosen.end());

  for (std::size_t idx : chosen) {
    Vec v(n, 0.0);
    v[idx] = 1.0;
    // Classical Gram-Schmidt with one re-orthogonalization pass.
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& c : cols) v = axpy(v, -dot(v, c), c);
    const double nv = norm(v);
    if (nv < 1e-8)
      throw SingularSystem("complete_orthonormal_basis: completion collapsed");
    cols.push_back(scale(1.0 / nv, v));
  }

  Mat e(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) e(i, j) = cols[j][i];
  return e;
}

}  // namespace minregion
