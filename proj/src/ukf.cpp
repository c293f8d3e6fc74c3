#include "regionid/ukf.hpp"

#include <array>
#include <cmath>

namespace regionid {

namespace {

constexpr double kJitter = 1e-12;

// Smallest eigenvalue of a symmetric 2x2.
double min_eig(const Mat2& P) {
  const double half_tr = 0.5 * (P(0, 0) + P(1, 1));
  const double half_diff = 0.5 * (P(0, 0) - P(1, 1));
  return half_tr - std::hypot(half_diff, 0.5 * (P(0, 1) + P(1, 0)));
}

Mat2 make_spd(Mat2 P) {
  P = 0.5 * (P + P.transpose().eval());
  const double lo = min_eig(P);
  if (lo < kJitter) P += (kJitter - lo) * Mat2::Identity();
  return P;
}

}  // namespace

UkfState ukf_step(const UkfState& state, const Measurement& m,
                  const UkfWorldModel& world, const SigmaParams& sp) {
  constexpr int n = 2;
  const double lambda = sp.alpha * sp.alpha * (n + sp.kappa) - n;
  const double c = n + lambda;

  const double wm0 = lambda / c;
  const double wc0 = wm0 + (1.0 - sp.alpha * sp.alpha + sp.beta);
  const double wi = 0.5 / c;

  // Predict: parameter random walk.
  const Vec2 xbar = state.mean;
  const Mat2 Pbar = make_spd(state.covariance + state.process_noise);

  const Mat2 Psc = c * Pbar;
  Eigen::LLT<Mat2> llt(Psc);
  Mat2 L = llt.matrixL();
  if (llt.info() != Eigen::Success)
    L = Eigen::LLT<Mat2>(make_spd(Psc)).matrixL();

  std::array<Vec2, 2 * n + 1> chi;
  chi[0] = xbar;
  for (int i = 0; i < n; ++i) {
    chi[1 + i] = xbar + L.col(i);
    chi[1 + n + i] = xbar - L.col(i);
  }

  std::array<Vec2, 2 * n + 1> z;
  for (std::size_t i = 0; i < chi.size(); ++i)
    z[i] = solve_qp(world.C * chi[i] + world.d, world.cs).u_star;

  Vec2 zbar = wm0 * z[0];
  for (int i = 1; i <= 2 * n; ++i) zbar += wi * z[i];

  Mat2 S = state.measurement_noise;
  Mat2 Pxz = Mat2::Zero();
  {
    const Vec2 dz0 = z[0] - zbar;
    S += wc0 * dz0 * dz0.transpose();
    // chi[0] - xbar = 0, so no Pxz contribution from the center point.
    for (int i = 1; i <= 2 * n; ++i) {
      const Vec2 dz = z[i] - zbar;
      const Vec2 dx = chi[i] - xbar;
      S += wi * dz * dz.transpose();
      Pxz += wi * dx * dz.transpose();
    }
  }

  double det = S(0, 0) * S(1, 1) - S(0, 1) * S(1, 0);
  if (!(std::abs(det) > 1e-300)) {
    S += state.measurement_noise;  // singular innovation guard
    det = S(0, 0) * S(1, 1) - S(0, 1) * S(1, 0);
  }
  const Mat2 K = Pxz * S.inverse();

  UkfState out = state;
  out.mean = xbar + K * (m.u_star - zbar);
  out.covariance = make_spd(Pbar - K * S * K.transpose());
  return out;
}

}  // namespace regionid
