#include "regionid/controller.hpp"

#include <cmath>

namespace regionid {

Vec2 nominal_control(const TaskModel& task, const Vec2& x) {
  return task.C(x) * task.theta + task.d(x);
}

ConstraintSystem build_constraints(const Vec2& x,
                                   const std::vector<Vec2>& obstacles,
                                   const SafetyParams& sp) {
  const int m = static_cast<int>(obstacles.size());
  ConstraintSystem cs;
  cs.A.resize(m, 2);
  cs.b.resize(m);
  for (int j = 0; j < m; ++j) {
    const Vec2 dx = x - obstacles[j];
    if (dx.norm() < 1e-12) throw std::runtime_error("singular constraint");
    cs.A.row(j) = -dx.transpose();
    cs.b(j) = 0.5 * sp.gamma * (dx.squaredNorm() - sp.D_s * sp.D_s);
  }
  return cs;
}

KktSolution solve_qp(const Vec2& u_hat, const ConstraintSystem& cs) {
  const int m = cs.size();
  const double scale =
      1.0 + u_hat.norm() + (m > 0 ? cs.b.cwiseAbs().maxCoeff() : 0.0);
  const double ptol = 1e-9 * scale;

  auto primal_ok = [&](const Vec2& u) {
    for (int j = 0; j < m; ++j)
      if (cs.A.row(j).dot(u) - cs.b(j) > ptol) return false;
    return true;
  };

  Vec2 u = u_hat;
  VecX mu_cert(0);
  std::vector<int> cert;
  bool found = primal_ok(u_hat);

  for (int i = 0; !found && i < m; ++i) {
    const Vec2 a = cs.A.row(i).transpose();
    const double n2 = a.squaredNorm();
    if (n2 <= 1e-24) continue;
    const double mu_i = 2.0 * (a.dot(u_hat) - cs.b(i)) / n2;
    if (mu_i < -1e-9) continue;
    const Vec2 cand = u_hat - 0.5 * mu_i * a;
    if (!primal_ok(cand)) continue;
    u = cand;
    mu_cert = VecX::Constant(1, mu_i);
    cert = {i};
    found = true;
  }

  for (int i = 0; !found && i < m; ++i) {
    for (int j = i + 1; !found && j < m; ++j) {
      Mat2 A2;
      A2.row(0) = cs.A.row(i);
      A2.row(1) = cs.A.row(j);
      const double det = A2(0, 0) * A2(1, 1) - A2(0, 1) * A2(1, 0);
      if (std::abs(det) <= 1e-12 * cs.A.row(i).norm() * cs.A.row(j).norm())
        continue;  // dependent pair; singles already cover it
      const Vec2 b2(cs.b(i), cs.b(j));
      const Vec2 cand = A2.inverse() * b2;
      const Vec2 w = 2.0 * (u_hat - cand);
      const Vec2 mu2 = A2.transpose().inverse() * w;
      if (mu2.minCoeff() < -1e-9) continue;
      if (!primal_ok(cand)) continue;
      u = cand;
      mu_cert = mu2;
      cert = {i, j};
      found = true;
    }
  }

  if (!found) throw std::runtime_error("QP infeasible");

  VecX mu = VecX::Zero(m);
  for (std::size_t k = 0; k < cert.size(); ++k) mu(cert[k]) = mu_cert(k);

  std::vector<int> geo;
  for (int j = 0; j < m; ++j)
    if (std::abs(cs.A.row(j).dot(u) - cs.b(j)) <= ptol) geo.push_back(j);

  // Degenerate stack: more rows sit on the optimum than the certificate
  // used. Spread minimum-norm multipliers over all of them when that stays
  // dual-feasible (multipliers are not unique there).
  if (geo.size() > cert.size()) {
    MatX2 Ag(static_cast<int>(geo.size()), 2);
    for (std::size_t k = 0; k < geo.size(); ++k) Ag.row(k) = cs.A.row(geo[k]);
    const Vec2 w = 2.0 * (u_hat - u);
    const VecX mu_geo = pseudoinverse(Ag).transpose() * w;
    if (mu_geo.size() > 0 && mu_geo.minCoeff() >= -1e-9 &&
        (Ag.transpose() * mu_geo - w).norm() <= 1e-9 * scale) {
      mu.setZero();
      for (std::size_t k = 0; k < geo.size(); ++k) mu(geo[k]) = mu_geo(k);
    }
  }

  KktSolution sol;
  sol.u_star = u;
  sol.mu = std::move(mu);
  sol.active_indices = std::move(geo);
  return sol;
}

}  // namespace regionid
