#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "regionid/pipeline.hpp"

namespace {

using namespace regionid;

struct CliOptions {
  std::string scenario_path;
  std::string out_dir;
  std::string run_dir;
  std::string measurements_dir;
  double dt = 0.0;        // 0 = keep scenario value
  double epsilon = 0.0;   // 0 = keep default
  double rank_tol = 0.0;  // 0 = keep default
  int cadence = 1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool finite_difference = false;
};

ScenarioConfig load_with_overrides(const CliOptions& o) {
  ScenarioConfig cfg = load_scenario(o.scenario_path);
  if (o.dt > 0.0) cfg.dt = o.dt;
  if (o.seed_set) cfg.seed = o.seed;
  return cfg;
}

IdentifyOptions make_identify_options(const CliOptions& o, bool with_ukf) {
  IdentifyOptions opts;
  if (o.epsilon > 0.0) opts.observer.epsilon = o.epsilon;
  if (o.rank_tol > 0.0) opts.observer.rank_tol = o.rank_tol;
  opts.cadence = o.cadence;
  opts.with_ukf = with_ukf;
  opts.finite_difference_velocity = o.finite_difference;
  return opts;
}

SimLog obtain_streams(const ScenarioConfig& cfg, const CliOptions& o) {
  if (o.measurements_dir.empty()) return run_scenario(cfg);
  SimLog log;
  for (std::size_t i = 0; i < cfg.robots.size(); ++i) {
    const auto path = std::filesystem::path(o.measurements_dir) /
                      (cfg.name + "_measurements_r" + std::to_string(i) +
                       ".jsonl");
    log.streams.push_back(read_measurements_jsonl(path.string()));
  }
  return log;
}

void print_report(const ScenarioConfig& cfg, const RunReport& report) {
  for (std::size_t i = 0; i < report.robots.size(); ++i) {
    const auto& rep = report.robots[i];
    const double final_area =
        rep.area_history.empty() ? 0.0 : rep.area_history.back().second;
    bool contained = true;
    for (bool c : rep.containment) contained = contained && c;
    std::cout << "robot " << i << ": final area " << final_area
              << ", goal contained " << (contained ? "yes" : "NO");
    if (!rep.ukf_samples.empty())
      std::cout << ", point-estimate error " << rep.ukf_samples.back().error;
    std::cout << "\n";
  }
  for (const auto& p : report.artifacts) std::cout << "wrote " << p << "\n";
  (void)cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feasible-region identification of task parameters in "
               "constraint-coupled multirobot systems"};
  app.require_subcommand(1);

  CliOptions o;
  const char* env_out = std::getenv("REGIONID_OUT_DIR");
  o.out_dir = env_out ? env_out : "out";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scenario", o.scenario_path, "scenario JSON file")
        ->required();
    sub->add_option("--out-dir", o.out_dir, "artifact directory");
    sub->add_option("--dt", o.dt, "override integration step (s)");
    sub->add_option("--seed", o.seed, "override scenario seed")
        ->each([&](const std::string&) { o.seed_set = true; });
  };

  CLI::App* sim_cmd = app.add_subcommand("simulate", "roll out a scenario");
  add_common(sim_cmd);

  CLI::App* id_cmd =
      app.add_subcommand("identify", "run the region estimator on a rollout");
  CLI::App* cmp_cmd = app.add_subcommand(
      "compare", "region estimator and point-estimator side by side");
  for (CLI::App* sub : {id_cmd, cmp_cmd}) {
    add_common(sub);
    sub->add_option("--epsilon", o.epsilon, "activity threshold scale");
    sub->add_option("--rank-tol", o.rank_tol, "rank decision tolerance");
    sub->add_option("--cadence", o.cadence, "fold every Nth step")
        ->check(CLI::PositiveNumber);
    sub->add_option("--measurements", o.measurements_dir,
                    "read measurement JSONL from this directory instead of "
                    "simulating");
    sub->add_flag("--finite-difference", o.finite_difference,
                  "derive velocities from positions");
  }

  CLI::App* render_cmd =
      app.add_subcommand("render", "draw region and curve SVGs from a run");
  add_common(render_cmd);
  render_cmd->add_option("--run-dir", o.run_dir,
                         "directory holding identify/compare outputs "
                         "(default: out-dir)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sim_cmd) {
      const ScenarioConfig cfg = load_with_overrides(o);
      const SimLog log = run_scenario(cfg);
      for (const auto& p : write_sim_artifacts(cfg, log, o.out_dir))
        std::cout << "wrote " << p << "\n";
      std::cout << "min separation " << log.min_separation << "\n";
    } else if (*id_cmd || *cmp_cmd) {
      const ScenarioConfig cfg = load_with_overrides(o);
      const SimLog log = obtain_streams(cfg, o);
      const IdentifyOptions opts = make_identify_options(o, bool(*cmp_cmd));
      const RunReport report = identify_and_write(cfg, log, opts, o.out_dir);
      print_report(cfg, report);
    } else if (*render_cmd) {
      const ScenarioConfig cfg = load_with_overrides(o);
      const std::string run_dir = o.run_dir.empty() ? o.out_dir : o.run_dir;
      for (const auto& p : render_artifacts(cfg, run_dir, o.out_dir))
        std::cout << "wrote " << p << "\n";
    }
    return 0;
  } catch (const ContradictionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    const std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    if (msg.rfind("QP infeasible", 0) == 0) return 4;
    return 2;
  }
}
