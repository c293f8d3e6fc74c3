#pragma once

#include <string>
#include <utility>
#include <vector>

#include "regionid/observer.hpp"
#include "regionid/serialize.hpp"
#include "regionid/sim.hpp"
#include "regionid/ukf.hpp"

namespace regionid {

struct IdentifyOptions {
  ObserverConfig observer;  // k_p overridden per robot from the scenario
  int cadence = 1;          // fold every Nth measurement into the region
  bool with_ukf = false;
  bool finite_difference_velocity = false;  // u* from position differences
  double fd_epsilon_inflation = 100.0;      // activity-threshold widening
  SigmaParams sigma;
};

struct UkfSample {
  double t = 0.0;
  Vec2 mean = Vec2::Zero();
  double trace_cov = 0.0;
  double error = 0.0;  // ||mean - true goal||
};

struct RobotReport {
  std::vector<RegionRecord> region_records;  // one per measurement
  std::vector<std::pair<double, double>> area_history;  // processed steps
  std::vector<UkfSample> ukf_samples;        // one per measurement
  std::vector<bool> containment;  // goal inside polygon, per record
  RegionEstimate estimate;
  UkfState ukf;
};

struct RunReport {
  std::vector<RobotReport> robots;
  double min_separation = 0.0;
  std::vector<std::string> artifacts;
};

/// Observer — and the UKF baseline when asked — over every robot's stream,
/// one worker per robot. Contradictions propagate as ContradictionError.
RunReport identify_run(const ScenarioConfig& cfg, const SimLog& log,
                       const IdentifyOptions& opts);

/// identify_run plus artifact files under out_dir: per-robot region JSONL,
/// summary CSV, and UKF/compare CSVs when the baseline runs.
RunReport identify_and_write(const ScenarioConfig& cfg, const SimLog& log,
                             const IdentifyOptions& opts,
                             const std::string& out_dir);

/// Simulation artifacts: per-robot measurement JSONL, a trace CSV, and a
/// small run summary JSON. Returns the paths.
std::vector<std::string> write_sim_artifacts(const ScenarioConfig& cfg,
                                             const SimLog& log,
                                             const std::string& out_dir);

/// Region + curve SVGs from previously written identify artifacts.
std::vector<std::string> render_artifacts(const ScenarioConfig& cfg,
                                          const std::string& run_dir,
                                          const std::string& out_dir);

}  // namespace regionid
