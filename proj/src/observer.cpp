#include "regionid/observer.hpp"

#include <cmath>
#include <utility>

namespace regionid {

ActiveSetDetection detect_active_set(const ConstraintSystem& cs,
                                     const Vec2& u_star, double epsilon) {
  ActiveSetDetection det;
  for (int j = 0; j < cs.size(); ++j) {
    const double r = cs.A.row(j).dot(u_star) - cs.b(j);
    if (std::abs(r) < epsilon) {
      det.active.push_back(j);
    } else {
      det.inactive.push_back(j);
      if (r >= epsilon) det.inconsistent = true;
    }
  }
  return det;
}

CaseClassification classify(const MatX2& A_ac, double rank_tol) {
  CaseClassification c;
  c.K = static_cast<int>(A_ac.rows());
  if (c.K == 0) {
    c.case_id = CaseId::A;
    return c;
  }
  if (c.K == 1) {
    c.case_id = CaseId::B;
    c.rank = 1;
    return c;
  }
  const ThinSvd svd = thin_svd(A_ac);
  const int r = rank_with_tol(svd, rank_tol);
  if (r >= 2) {
    c.rank = 2;
    c.case_id = (c.K == 2) ? CaseId::D : CaseId::E;
  } else {
    c.rank = 1;
    c.case_id = CaseId::C;
  }
  return c;
}

AffineControlModel decompose_case_a(const Mat2& C, const Vec2& d) {
  AffineControlModel m;
  m.G = C;
  m.f = d;
  m.defined = true;
  return m;
}

AffineControlModel decompose_case_b(const Vec2& a_i, double b_i, const Mat2& C,
                                    const Vec2& d) {
  const double na = a_i.norm();
  if (na < 1e-12) throw std::runtime_error("singular constraint");
  const Vec2 v1 = a_i / na;
  const Vec2 v2 = rotate90(v1);
  const Mat2 P2 = v2 * v2.transpose();
  AffineControlModel m;
  m.G = P2 * C;
  m.f = v1 * (b_i / na) + P2 * d;
  m.defined = true;
  return m;
}

AffineControlModel decompose_case_c(const MatX2& A_ac, const VecX& b_ac,
                                    const Mat2& C, const Vec2& d,
                                    bool* inconsistent) {
  if (inconsistent) *inconsistent = false;
  const ThinSvd svd = thin_svd(A_ac);
  const double s1 = svd.sigma(0);
  if (s1 <= 0.0) throw std::runtime_error("singular constraint");
  const VecX u1 = svd.U.col(0);
  const double bbar = u1.dot(b_ac);
  if ((b_ac - u1 * bbar).norm() > 1e-6 * (1.0 + b_ac.norm())) {
    // b outside the rank-1 range: project back and let the caller know.
    if (inconsistent) *inconsistent = true;
  }
  const Vec2 v2 = svd.V.col(1);
  const Mat2 P2 = v2 * v2.transpose();
  AffineControlModel m;
  m.G = P2 * C;
  m.f = svd.V.col(0) * (bbar / s1) + P2 * d;
  m.defined = true;
  return m;
}

HalfspaceSet omega_case_a(const ConstraintSystem& cs, const Mat2& C,
                          const Vec2& d) {
  HalfspaceSet out(2);
  for (int j = 0; j < cs.size(); ++j) {
    const Vec2 a = cs.A.row(j).transpose();
    const Vec2 g = C.transpose() * a;
    out.add(Halfspace(g(0), g(1), cs.b(j) - a.dot(d), true));
  }
  return out;
}

HalfspaceSet omega_case_b(const AffineControlModel& model,
                          const ConstraintSystem& cs, int active_i,
                          const Mat2& C, const Vec2& d) {
  HalfspaceSet out(2);
  const Mat2 Gt = C - model.G;
  const Vec2 ft = d - model.f;
  const Vec2 a = cs.A.row(active_i).transpose();
  const Vec2 g = Gt.transpose() * a;
  out.add(Halfspace(-g(0), -g(1), a.dot(ft), false));  // multiplier >= 0
  for (int j = 0; j < cs.size(); ++j) {
    if (j == active_i) continue;
    const Vec2 aj = cs.A.row(j).transpose();
    const Vec2 gj = model.G.transpose() * aj;
    out.add(Halfspace(gj(0), gj(1), cs.b(j) - aj.dot(model.f), true));
  }
  return out;
}

HalfspaceSet omega_case_c(const MatX2& A_ac, const VecX& b_ac,
                          const ConstraintSystem& cs,
                          const std::vector<int>& active, const Mat2& C,
                          const Vec2& d, int fm_row_cap) {
  const int K = static_cast<int>(A_ac.rows());
  const int ne = K - 1;
  bool incons = false;
  const AffineControlModel model = decompose_case_c(A_ac, b_ac, C, d, &incons);
  const ThinSvd svd = thin_svd(A_ac);
  const double s1 = svd.sigma(0);
  const Vec2 u1 = svd.V.col(0);  // range direction of the transposed stack
  const Mat2 Gt = C - model.G;
  const Vec2 ft = d - model.f;
  const Vec2 gtheta = Gt.transpose() * u1;
  const double fconst = u1.dot(ft);

  // mu(theta, eta) = 2 U.col(0) (u1.(Gt theta + ft))/s1 + U(:,1:) eta >= 0
  HalfspaceSet sys(2 + ne);
  for (int k = 0; k < K; ++k) {
    const double c0 = 2.0 * svd.U(k, 0) / s1;
    VecX n = VecX::Zero(2 + ne);
    n(0) = -c0 * gtheta(0);
    n(1) = -c0 * gtheta(1);
    for (int j = 0; j < ne; ++j) n(2 + j) = -svd.U(k, 1 + j);
    sys.add(Halfspace(std::move(n), c0 * fconst, false));
  }
  // Inactive rows ride along with zero eta coefficients.
  std::vector<char> is_active(static_cast<std::size_t>(cs.size()), 0);
  for (int i : active) is_active[static_cast<std::size_t>(i)] = 1;
  for (int j = 0; j < cs.size(); ++j) {
    if (is_active[static_cast<std::size_t>(j)]) continue;
    const Vec2 aj = cs.A.row(j).transpose();
    const Vec2 gj = model.G.transpose() * aj;
    VecX n = VecX::Zero(2 + ne);
    n(0) = gj(0);
    n(1) = gj(1);
    sys.add(Halfspace(std::move(n), cs.b(j) - aj.dot(model.f), true));
  }
  return eliminate_eta(sys, ne, fm_row_cap);
}

HalfspaceSet omega_case_d(const Mat2& A_ac, const Vec2& b_ac, const Mat2& C,
                          const Vec2& d) {
  const Mat2 Minv = A_ac.inverse();
  const Vec2 ustar = Minv * b_ac;
  const Mat2 W = Minv.transpose() * C;
  const Vec2 rhs = Minv.transpose() * (d - ustar);
  HalfspaceSet out(2);
  for (int k = 0; k < 2; ++k)
    out.add(Halfspace(-W(k, 0), -W(k, 1), rhs(k), false));
  return out;
}

HalfspaceSet omega_case_e(const MatX2& A_ac, const VecX& b_ac, const Mat2& C,
                          const Vec2& d, int fm_row_cap) {
  const int K = static_cast<int>(A_ac.rows());
  const int ne = K - 2;
  const ThinSvd svd = thin_svd(A_ac);
  if (svd.sigma.size() < 2 || svd.sigma(1) <= 0.0)
    throw std::runtime_error("singular constraint");
  const Vec2 ustar = pseudoinverse(A_ac) * b_ac;
  const Vec2 rhs = d - ustar;

  HalfspaceSet sys(2 + ne);
  for (int k = 0; k < K; ++k) {
    const Vec2 gk = 2.0 * (svd.U(k, 0) / svd.sigma(0) * svd.V.col(0) +
                           svd.U(k, 1) / svd.sigma(1) * svd.V.col(1));
    const Vec2 nt = -(C.transpose() * gk);
    VecX n = VecX::Zero(2 + ne);
    n(0) = nt(0);
    n(1) = nt(1);
    for (int j = 0; j < ne; ++j) n(2 + j) = -svd.U(k, 2 + j);
    sys.add(Halfspace(std::move(n), gk.dot(rhs), false));
  }
  return eliminate_eta(sys, ne, fm_row_cap);
}

namespace {

Halfspace unit_row(const Halfspace& r) {
  Halfspace o = r;
  const double nn = o.normal.norm();
  if (nn > 1e-12) {
    o.normal /= nn;
    o.offset /= nn;
  }
  return o;
}

// Rows present (after unit scaling) in both sets. The region they describe
// contains the regions of both inputs, so a too-close-to-call rank decision
// can take this without risking the true parameter.
HalfspaceSet common_rows(const HalfspaceSet& a, const HalfspaceSet& b) {
  HalfspaceSet out(a.dim);
  for (const auto& ra : a.rows) {
    const Halfspace ua = unit_row(ra);
    for (const auto& rb : b.rows) {
      const Halfspace ub = unit_row(rb);
      if (ua.normal.size() == ub.normal.size() &&
          (ua.normal - ub.normal).norm() <= 1e-9 &&
          std::abs(ua.offset - ub.offset) <= 1e-9) {
        out.add(ua);
        break;
      }
    }
  }
  return out;
}

}  // namespace

RegionEstimate step(const RegionEstimate& estimate, const Measurement& m,
                    const ObserverConfig& config, StepLog* log) {
  StepLog local;
  StepLog& lg = log ? *log : local;
  lg = StepLog{};

  const ConstraintSystem cs =
      build_constraints(m.x, m.obstacle_positions, config.safety);
  const double eps_eff =
      config.epsilon *
      (1.0 + (cs.size() > 0 ? cs.b.cwiseAbs().maxCoeff() : 0.0));
  const ActiveSetDetection det = detect_active_set(cs, m.u_star, eps_eff);
  lg.active = det.active;
  if (det.inconsistent) {
    lg.skipped = true;
    return estimate;
  }

  TaskModel hypo;
  hypo.k_p = config.k_p;
  const Mat2 C = hypo.C(m.x);
  const Vec2 d = hypo.d(m.x);

  const int K = static_cast<int>(det.active.size());
  MatX2 A_ac(K, 2);
  VecX b_ac(K);
  for (int i = 0; i < K; ++i) {
    A_ac.row(i) = cs.A.row(det.active[i]);
    b_ac(i) = cs.b(det.active[i]);
  }

  CaseClassification cls = classify(A_ac, config.rank_tol);
  cls.active = det.active;
  cls.inactive = det.inactive;
  lg.case_id = cls.case_id;

  HalfspaceSet omega(2);
  switch (cls.case_id) {
    case CaseId::A:
      omega = omega_case_a(cs, C, d);
      break;
    case CaseId::B: {
      const int i = det.active[0];
      const AffineControlModel model =
          decompose_case_b(cs.A.row(i).transpose(), cs.b(i), C, d);
      omega = omega_case_b(model, cs, i, C, d);
      break;
    }
    default: {
      const ThinSvd svd = thin_svd(A_ac);
      const double ratio =
          svd.sigma(0) > 0.0 ? svd.sigma(1) / svd.sigma(0) : 0.0;
      lg.borderline = ratio > config.rank_tol / 10.0 &&
                      ratio < config.rank_tol * 10.0;
      auto rank1 = [&] {
        return omega_case_c(A_ac, b_ac, cs, det.active, C, d,
                            config.fm_row_cap);
      };
      auto rank2 = [&] {
        if (K == 2) {
          const Mat2 A2 = A_ac;
          return omega_case_d(A2, Vec2(b_ac(0), b_ac(1)), C, d);
        }
        return omega_case_e(A_ac, b_ac, C, d, config.fm_row_cap);
      };
      if (lg.borderline) {
        omega = common_rows(rank1(), rank2());
      } else if (cls.rank >= 2) {
        omega = rank2();
      } else {
        omega = rank1();
      }
      break;
    }
  }

  ConvexPolygon next = intersect_all(estimate.theta_polygon, omega);
  if (next.empty()) throw ContradictionError{};

  RegionEstimate out = estimate;
  out.theta_polygon = std::move(next);
  out.omega_log.push_back(std::move(omega));
  out.area_history.emplace_back(m.t, area(out.theta_polygon));
  return out;
}

}  // namespace regionid
