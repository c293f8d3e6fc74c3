#pragma once

#include "regionid/controller.hpp"
#include "regionid/observer.hpp"

namespace regionid {

struct SigmaParams {
  double alpha = 1e-3;
  double beta = 2.0;
  double kappa = 0.0;
};

/// Point estimator state over the 2-D parameter, random-walk process model.
/// R assumes a few cm/s of velocity sensing noise; the logs themselves are
/// exact, so this only sets how aggressively the filter trusts one step.
struct UkfState {
  Vec2 mean = Vec2::Zero();
  Mat2 covariance = Mat2::Identity();
  Mat2 process_noise = 1e-8 * Mat2::Identity();
  Mat2 measurement_noise = 2.5e-3 * Mat2::Identity();
};

/// Everything the measurement model needs at one instant: the constraint
/// rows plus the affine task pieces, so h(theta) = qp(C theta + d)'s velocity.
struct UkfWorldModel {
  ConstraintSystem cs;
  Mat2 C = Mat2::Identity();
  Vec2 d = Vec2::Zero();
};

/// Unscented predict + update against the measured velocity. The QP is
/// re-solved per sigma point; when every active pair pins the velocity the
/// innovation gain vanishes and the mean freezes — no special casing.
UkfState ukf_step(const UkfState& state, const Measurement& m,
                  const UkfWorldModel& world, const SigmaParams& sp = {});

}  // namespace regionid
