#pragma once

#include <Eigen/Dense>

namespace regionid {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;
// Constraint blocks: K rows, one 2-vector normal per row.
using MatX2 = Eigen::Matrix<double, Eigen::Dynamic, 2>;

// Counterclockwise quarter turn: (x, y) -> (-y, x).
inline Vec2 rotate90(const Vec2& v) { return Vec2(-v.y(), v.x()); }

/// Thin SVD of a K x 2 matrix, A = U * diag(sigma) * V^T.
///
/// U is the full K x K orthogonal factor (trailing columns span the
/// cokernel, which the multiplier parametrizations need), sigma holds the
/// min(K,2) singular values in non-increasing order, V is 2 x 2 orthogonal.
struct ThinSvd {
  MatX U;      // K x K
  VecX sigma;  // min(K, 2), non-increasing, >= 0
  Mat2 V;

  int rows() const { return static_cast<int>(U.rows()); }
};

/// SVD via closed-form eigendecomposition of the 2x2 Gram matrix A^T A.
/// Sign convention: the first entry of each V column with magnitude above
/// 1e-12 is made positive, so factorizations are deterministic.
/// A zero matrix yields sigma = 0, V = I, U = I.
ThinSvd thin_svd(const MatX2& A);

/// Number of singular values above rel_tol * sigma_max (0 if sigma_max == 0).
int rank_with_tol(const ThinSvd& svd, double rel_tol);

/// Moore-Penrose pseudoinverse (2 x K), singular values below
/// rel_tol * sigma_max treated as zero.
Eigen::Matrix<double, 2, Eigen::Dynamic> pseudoinverse(const MatX2& A,
                                                       double rel_tol = 1e-12);

}  // namespace regionid
