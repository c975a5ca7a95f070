// Small dense vector/matrix helpers used throughout the library.
//
// Ambient dimensions here are tiny (typically 2..6), so the routines favor
// exactness and determinism over asymptotic speed: classical Gram-Schmidt
// with one re-orthogonalization pass for bases, Cholesky for SPD solves and
// a cyclic Jacobi sweep for symmetric eigenvalues.
#pragma once

#include <cstddef>
#include <vector>

#include "minregion/errors.hpp"

namespace minregion {

using Vec = std::vector<double>;

/// Dense row-major matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Mat identity(std::size_t n);

  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

// --- vector helpers ---------------------------------------------------------
double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(double s, const Vec& a);
/// a + s*b
Vec axpy(const Vec& a, double s, const Vec& b);
double distance(const Vec& a, const Vec& b);

// --- matrix helpers ---------------------------------------------------------
Vec matvec(const Mat& m, const Vec& x);
Mat matmul(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
/// m + s * I
Mat add_scaled_identity(Mat m, double s);

/// Solves A x = rhs for symmetric positive definite A via Cholesky.
/// Throws SingularSystem when a pivot collapses.
Vec solve_spd(Mat a, Vec rhs);

/// All eigenvalues of a symmetric matrix, ascending (cyclic Jacobi;
/// closed form for 2x2).
std::vector<double> symmetric_eigenvalues(Mat a);
double min_eigenvalue(const Mat& a);

/// Returns an n x n orthonormal matrix whose leading columns are the given
/// seed vectors (assumed unit length and mutually orthogonal).  The
/// completion uses standard basis vectors: the seed-aligned ones (largest
/// projection onto the seed span) are skipped, the rest are orthogonalized
/// in index order, and a single re-orthogonalization pass tightens the
/// result.  Deterministic for fixed input.
Mat complete_orthonormal_basis(const std::vector<Vec>& seeds, std::size_t n);

}  // namespace minregion
