#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "regionid/controller.hpp"
#include "regionid/polytope.hpp"

namespace regionid {

/// One observed sample of a robot: where it is, what it did, and where the
/// constraint-generating neighbours were.
struct Measurement {
  double t = 0.0;
  Vec2 x = Vec2::Zero();
  Vec2 u_star = Vec2::Zero();
  std::vector<Vec2> obstacle_positions;
};

enum class CaseId { A, B, C, D, E };

inline char case_label(CaseId c) {
  switch (c) {
    case CaseId::A: return 'A';
    case CaseId::B: return 'B';
    case CaseId::C: return 'C';
    case CaseId::D: return 'D';
    case CaseId::E: return 'E';
  }
  return '?';
}

/// Active-count / rank taxonomy:
///   K=0 -> A, K=1 -> B, K>=2 rank 1 -> C, K=2 rank 2 -> D, K>2 rank 2 -> E.
struct CaseClassification {
  CaseId case_id = CaseId::A;
  std::vector<int> active;
  std::vector<int> inactive;
  int K = 0;
  int rank = 0;  // 0 when K == 0
};

/// Control as an affine function of the hypothesized parameter,
/// u = G theta + f. Not defined in cases D/E (control is theta-independent
/// there, which is exactly what starves point-wise estimators).
struct AffineControlModel {
  Mat2 G = Mat2::Zero();
  Vec2 f = Vec2::Zero();
  bool defined = false;
};

/// Running intersection of per-step consistent sets with the prior box.
struct RegionEstimate {
  ConvexPolygon theta_polygon;
  std::vector<HalfspaceSet> omega_log;                  // processed steps only
  std::vector<std::pair<double, double>> area_history;  // (t, area)
};

struct ObserverConfig {
  double k_p = 1.0;        // hypothesized task gain
  SafetyParams safety;     // D_s and gamma assumed known
  double epsilon = 1e-6;   // activity threshold scale; effective threshold
                           // is epsilon * (1 + max|b_j|)
  double rank_tol = 1e-8;  // sigma2 > rank_tol * sigma1 means rank 2
  int fm_row_cap = 4096;
};

/// Raised when the region pinches to nothing: the measurements contradict
/// the hypothesized task family.
struct ContradictionError : std::runtime_error {
  ContradictionError() : std::runtime_error("contradiction") {}
};

struct ActiveSetDetection {
  std::vector<int> active;    // |a_j.u - b_j| < epsilon
  std::vector<int> inactive;  // a_j.u - b_j <= -epsilon
  bool inconsistent = false;  // some residual >= +epsilon (primal violation)
};

ActiveSetDetection detect_active_set(const ConstraintSystem& cs,
                                     const Vec2& u_star, double epsilon);

/// Fills case_id, K, rank from the active rows; index sets are the
/// caller's to attach.
CaseClassification classify(const MatX2& A_ac, double rank_tol);

AffineControlModel decompose_case_a(const Mat2& C, const Vec2& d);

/// Throws "singular constraint" on a zero active row.
AffineControlModel decompose_case_b(const Vec2& a_i, double b_i, const Mat2& C,
                                    const Vec2& d);

/// Rank-1 stack of active rows. When b_ac sticks out of the rank-1 range
/// (noisy data), it is projected back and *inconsistent is set.
AffineControlModel decompose_case_c(const MatX2& A_ac, const VecX& b_ac,
                                    const Mat2& C, const Vec2& d,
                                    bool* inconsistent = nullptr);

/// No active rows: every constraint cuts strictly. M rows.
HalfspaceSet omega_case_a(const ConstraintSystem& cs, const Mat2& C,
                          const Vec2& d);

/// One active row: strict rows from each inactive constraint plus one
/// non-strict row from multiplier non-negativity.
HalfspaceSet omega_case_b(const AffineControlModel& model,
                          const ConstraintSystem& cs, int active_i,
                          const Mat2& C, const Vec2& d);

/// Rank-1 stack: multiplier rows over (theta, eta) with eta in R^{K-1},
/// plus strict inactive rows; eta eliminated before returning.
HalfspaceSet omega_case_c(const MatX2& A_ac, const VecX& b_ac,
                          const ConstraintSystem& cs,
                          const std::vector<int>& active, const Mat2& C,
                          const Vec2& d, int fm_row_cap = 4096);

/// Two independent active rows: exactly two non-strict rows; inactive
/// constraints carry no information here.
HalfspaceSet omega_case_d(const Mat2& A_ac, const Vec2& b_ac, const Mat2& C,
                          const Vec2& d);

/// K > 2 active rows of rank 2: multiplier rows with eta in R^{K-2},
/// eta eliminated; no inactive rows.
HalfspaceSet omega_case_e(const MatX2& A_ac, const VecX& b_ac, const Mat2& C,
                          const Vec2& d, int fm_row_cap = 4096);

struct StepLog {
  CaseId case_id = CaseId::A;
  std::vector<int> active;
  bool skipped = false;
  bool borderline = false;  // rank decision too close; union-safe rows used
};

/// One measurement folded into the estimate: build constraints, detect the
/// active set, classify, emit the case region, intersect. Inconsistent
/// measurements are skipped (estimate returned unchanged, log flagged).
/// Throws ContradictionError when the region empties.
RegionEstimate step(const RegionEstimate& estimate, const Measurement& m,
                    const ObserverConfig& config, StepLog* log = nullptr);

}  // namespace regionid
