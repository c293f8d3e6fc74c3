#include "regionid/sim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace regionid {

WorldState initial_state(const ScenarioConfig& cfg) {
  WorldState ws;
  ws.t = 0.0;
  ws.positions.reserve(cfg.robots.size());
  for (const auto& r : cfg.robots) ws.positions.push_back(r.start);
  ws.last_controls.assign(cfg.robots.size(), Vec2::Zero());
  return ws;
}

std::vector<Vec2> obstacles_for(const WorldState& ws, int robot,
                                const ScenarioConfig& cfg) {
  std::vector<Vec2> obs;
  obs.reserve(ws.positions.size() - 1 + cfg.static_obstacles.size());
  for (std::size_t j = 0; j < ws.positions.size(); ++j)
    if (static_cast<int>(j) != robot) obs.push_back(ws.positions[j]);
  for (const auto& s : cfg.static_obstacles) obs.push_back(s);
  return obs;
}

WorldState step_world(const WorldState& ws, const ScenarioConfig& cfg) {
  const int n = static_cast<int>(ws.positions.size());
  WorldState next = ws;
  for (int i = 0; i < n; ++i) {
    TaskModel task;
    task.k_p = cfg.robots[i].k_p;
    task.theta = cfg.robots[i].goal;
    const Vec2 u_hat = nominal_control(task, ws.positions[i]);
    const ConstraintSystem cs =
        build_constraints(ws.positions[i], obstacles_for(ws, i, cfg),
                          cfg.safety);
    Vec2 u;
    try {
      u = solve_qp(u_hat, cs).u_star;
    } catch (const std::runtime_error& e) {
      throw std::runtime_error(std::string(e.what()) + " (robot " +
                               std::to_string(i) + ", t=" +
                               std::to_string(ws.t) + ")");
    }
    next.last_controls[i] = u;
  }
  for (int i = 0; i < n; ++i)
    next.positions[i] = ws.positions[i] + cfg.dt * next.last_controls[i];
  next.t = ws.t + cfg.dt;
  return next;
}

namespace {

double min_pairwise_separation(const WorldState& ws,
                               const ScenarioConfig& cfg) {
  double lo = std::numeric_limits<double>::infinity();
  const auto& p = ws.positions;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j)
      lo = std::min(lo, (p[i] - p[j]).norm());
    for (const auto& s : cfg.static_obstacles)
      lo = std::min(lo, (p[i] - s).norm());
  }
  return lo;
}

}  // namespace

SimLog run_scenario(const ScenarioConfig& cfg) {
  if (cfg.dt <= 0.0) throw std::runtime_error("dt must be positive");
  const int steps = static_cast<int>(std::llround(cfg.duration / cfg.dt));
  const int n = static_cast<int>(cfg.robots.size());

  SimLog log;
  log.streams.resize(n);
  WorldState ws = initial_state(cfg);
  log.trace.push_back(ws);
  log.min_separation = min_pairwise_separation(ws, cfg);

  for (int k = 0; k < steps; ++k) {
    const WorldState next = step_world(ws, cfg);
    for (int i = 0; i < n; ++i) {
      Measurement m;
      m.t = ws.t;
      m.x = ws.positions[i];
      m.u_star = next.last_controls[i];
      m.obstacle_positions = obstacles_for(ws, i, cfg);
      log.streams[i].push_back(std::move(m));
    }
    ws = next;
    log.trace.push_back(ws);
    log.min_separation =
        std::min(log.min_separation, min_pairwise_separation(ws, cfg));
  }
  return log;
}

}  // namespace regionid
