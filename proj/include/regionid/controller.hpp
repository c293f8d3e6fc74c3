#pragma once

#include <stdexcept>
#include <vector>

#include "regionid/linalg.hpp"

namespace regionid {

enum class TaskKind { goal_reaching };

/// Proportional goal-reaching law u_hat = k_p (theta - x), exposed in the
/// affine form u_hat = C(x) theta + d(x) so an estimator can swap in a
/// hypothesized theta.
struct TaskModel {
  TaskKind kind = TaskKind::goal_reaching;
  double k_p = 1.0;            // 1/s, > 0
  Vec2 theta = Vec2::Zero();   // goal position; hidden from estimators

  Mat2 C(const Vec2& /*x*/) const { return k_p * Mat2::Identity(); }
  Vec2 d(const Vec2& x) const { return -k_p * x; }
};

struct SafetyParams {
  double D_s = 0.5;       // safety distance, m
  double gamma = 2.0;     // barrier rate, 1/s
  double epsilon = 1e-6;  // activity threshold on |a.u - b|
};

/// Stacked collision-avoidance rows a_j^T u <= b_j, one per neighbour.
struct ConstraintSystem {
  MatX2 A = MatX2(0, 2);  // row j = -(x - x_j)^T
  VecX b = VecX(0);

  int size() const { return static_cast<int>(A.rows()); }
};

struct KktSolution {
  Vec2 u_star = Vec2::Zero();
  VecX mu;                          // per-row multipliers, >= -1e-9
  std::vector<int> active_indices;  // rows with zero residual at u_star
};

Vec2 nominal_control(const TaskModel& task, const Vec2& x);

/// Throws "singular constraint" when an obstacle coincides with x
/// (no valid row exists; safety is already violated there).
ConstraintSystem build_constraints(const Vec2& x,
                                   const std::vector<Vec2>& obstacles,
                                   const SafetyParams& sp);

/// Exact projection of u_hat onto {u : Au <= b} plus KKT multipliers,
/// found by enumerating candidate active subsets of size 0, 1, 2 in order
/// (first certificate wins, so ties resolve to the smallest subset).
/// active_indices reports every row with zero residual at the optimum;
/// for degenerate stacks the spread minimum-norm multipliers are returned
/// when they stay dual-feasible. Throws "QP infeasible" if no u satisfies
/// the rows.
KktSolution solve_qp(const Vec2& u_hat, const ConstraintSystem& cs);

}  // namespace regionid
