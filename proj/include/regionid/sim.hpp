#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "regionid/controller.hpp"
#include "regionid/observer.hpp"

namespace regionid {

struct RobotSpec {
  Vec2 start = Vec2::Zero();
  Vec2 goal = Vec2::Zero();  // the robot's private theta
  double k_p = 1.0;
};

struct ScenarioConfig {
  std::string name;
  std::vector<RobotSpec> robots;
  std::vector<Vec2> static_obstacles;  // zero-velocity robots as far as (6) cares
  SafetyParams safety;
  double dt = 0.02;
  double duration = 10.0;
  Vec2 theta0_lo = Vec2(-5.0, -5.0);  // prior parameter box
  Vec2 theta0_hi = Vec2(5.0, 5.0);
  std::uint64_t seed = 0;
};

struct WorldState {
  double t = 0.0;
  std::vector<Vec2> positions;
  std::vector<Vec2> last_controls;
};

struct SimLog {
  // streams[i][k]: robot i at step k — x and obstacle positions sampled
  // before the synchronous move, u_star as applied.
  std::vector<std::vector<Measurement>> streams;
  std::vector<WorldState> trace;
  double min_separation = std::numeric_limits<double>::infinity();
};

WorldState initial_state(const ScenarioConfig& cfg);

/// The obstacle list robot i sees: every other robot in index order, then
/// the static obstacles in config order. Observers must see the same order.
std::vector<Vec2> obstacles_for(const WorldState& ws, int robot,
                                const ScenarioConfig& cfg);

/// Synchronous explicit-Euler step: each robot solves its QP against the
/// same position snapshot, then everyone moves. Throws "QP infeasible ..."
/// with the robot index and time on solver failure.
WorldState step_world(const WorldState& ws, const ScenarioConfig& cfg);

/// Full rollout; deterministic for a given config. Measurement streams are
/// exact (no sensor noise).
SimLog run_scenario(const ScenarioConfig& cfg);

}  // namespace regionid
