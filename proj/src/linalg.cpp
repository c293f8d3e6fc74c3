#include "regionid/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace regionid {

namespace {

// First entry with |v_i| > 1e-12 made positive.
void fix_sign(Eigen::Ref<Eigen::Vector2d> v) {
  for (int i = 0; i < 2; ++i) {
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

// Extend the first `have` orthonormal columns of U to a full orthonormal
// basis using standard basis vectors, two Gram-Schmidt passes each.
void complete_basis(MatX& U, int have) {
  const int k = static_cast<int>(U.rows());
  int filled = have;
  for (int e = 0; e < k && filled < k; ++e) {
    VecX cand = VecX::Zero(k);
    cand(e) = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < filled; ++j) cand -= U.col(j).dot(cand) * U.col(j);
    const double n = cand.norm();
    if (n > 1e-6) {
      U.col(filled++) = cand / n;
    }
  }
}

}  // namespace

ThinSvd thin_svd(const MatX2& A) {
  const int k = static_cast<int>(A.rows());
  ThinSvd out;
  out.U = MatX::Identity(k, k);
  out.sigma = VecX::Zero(std::min(k, 2));
  out.V = Mat2::Identity();

  // Eigendecomposition of the Gram matrix G = A^T A (2x2 symmetric PSD).
  const Mat2 G = A.transpose() * A;
  if (G.norm() == 0.0) return out;  // zero matrix: documented identity choice

  const double half_tr = 0.5 * (G(0, 0) + G(1, 1));
  const double half_diff = 0.5 * (G(0, 0) - G(1, 1));
  const double disc = std::hypot(half_diff, G(0, 1));
  const double lam1 = half_tr + disc;

  Vec2 v1;
  // Pick the better-conditioned eigenvector formula for lam1.
  const Vec2 c1(G(0, 1), lam1 - G(0, 0));
  const Vec2 c2(lam1 - G(1, 1), G(0, 1));
  v1 = (c1.norm() >= c2.norm()) ? c1 : c2;
  if (v1.norm() == 0.0) v1 = Vec2(1.0, 0.0);  // G is a multiple of I
  v1.normalize();
  Vec2 v2 = rotate90(v1);
  fix_sign(v1);
  fix_sign(v2);

  // sigma_i = ||A v_i|| keeps the U * diag(sigma) * V^T reconstruction exact
  // even when the small Gram eigenvalue cancels badly.
  double s1 = (A * v1).norm();
  double s2 = (A * v2).norm();
  if (s2 > s1) {
    std::swap(s1, s2);
    std::swap(v1, v2);
  }

  out.V.col(0) = v1;
  out.V.col(1) = v2;
  out.sigma(0) = s1;
  if (k >= 2) out.sigma(1) = s2;

  int have = 0;
  if (s1 > 0.0) {
    out.U.col(0) = (A * v1) / s1;
    have = 1;
    if (k >= 2 && s2 > 0.0) {
      VecX u2 = (A * v2) / s2;
      u2 -= out.U.col(0).dot(u2) * out.U.col(0);  // keep U orthonormal
      const double n = u2.norm();
      if (n > 0.5) {
        out.U.col(1) = u2 / n;
        have = 2;
      }
    }
  }
  complete_basis(out.U, have);
  return out;
}

int rank_with_tol(const ThinSvd& svd, double rel_tol) {
  if (svd.sigma.size() == 0 || svd.sigma(0) <= 0.0) return 0;
  const double cut = rel_tol * svd.sigma(0);
  int r = 0;
  for (int i = 0; i < svd.sigma.size(); ++i)
    if (svd.sigma(i) > cut) ++r;
  return r;
}

Eigen::Matrix<double, 2, Eigen::Dynamic> pseudoinverse(const MatX2& A,
                                                       double rel_tol) {
  const ThinSvd svd = thin_svd(A);
  const int k = svd.rows();
  Eigen::Matrix<double, 2, Eigen::Dynamic> pinv(2, k);
  pinv.setZero();
  if (svd.sigma.size() == 0 || svd.sigma(0) == 0.0) return pinv;
  const double cut = rel_tol * svd.sigma(0);
  for (int i = 0; i < svd.sigma.size(); ++i) {
    if (svd.sigma(i) > cut)
      pinv += (svd.V.col(i) / svd.sigma(i)) * svd.U.col(i).transpose();
  }
  return pinv;
}

}  // namespace regionid
