#include "regionid/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <stdexcept>

#include "regionid/svg.hpp"

namespace regionid {

namespace {

std::string robot_stem(const ScenarioConfig& cfg, const std::string& what,
                       int robot) {
  return cfg.name + "_" + what + "_r" + std::to_string(robot);
}

RobotReport process_robot(const ScenarioConfig& cfg, const SimLog& log,
                          const IdentifyOptions& opts, int robot) {
  const auto& stream = log.streams[static_cast<std::size_t>(robot)];
  const Vec2 theta_true = cfg.robots[static_cast<std::size_t>(robot)].goal;

  ObserverConfig ocfg = opts.observer;
  ocfg.k_p = cfg.robots[static_cast<std::size_t>(robot)].k_p;
  ocfg.safety = cfg.safety;
  if (opts.finite_difference_velocity)
    ocfg.epsilon *= opts.fd_epsilon_inflation;

  RobotReport rep;
  rep.estimate.theta_polygon = ConvexPolygon::box(cfg.theta0_lo, cfg.theta0_hi);

  rep.ukf.mean = 0.5 * (cfg.theta0_lo + cfg.theta0_hi);
  const Vec2 w = cfg.theta0_hi - cfg.theta0_lo;
  rep.ukf.covariance = Vec2(w.x() * w.x() / 12.0, w.y() * w.y() / 12.0)
                           .asDiagonal();  // uniform-box prior moments

  const int cadence = std::max(opts.cadence, 1);
  for (std::size_t k = 0; k < stream.size(); ++k) {
    Measurement m = stream[k];
    if (opts.finite_difference_velocity && k + 1 < stream.size())
      m.u_star = (stream[k + 1].x - m.x) / cfg.dt;

    StepLog slog;
    bool processed = (static_cast<int>(k) % cadence == 0);
    if (processed) {
      rep.estimate = step(rep.estimate, m, ocfg, &slog);
      processed = !slog.skipped;
    }

    RegionRecord rec;
    rec.t = m.t;
    rec.case_id = processed ? case_label(slog.case_id) : '-';
    rec.active = slog.active;
    if (processed) rec.omega = rep.estimate.omega_log.back();
    rec.polygon = rep.estimate.theta_polygon;
    rec.area = area(rep.estimate.theta_polygon);
    rec.skipped = !processed;
    rep.containment.push_back(
        contains(rep.estimate.theta_polygon, theta_true, 1e-6));
    rep.region_records.push_back(std::move(rec));

    if (opts.with_ukf) {
      UkfWorldModel world;
      world.cs = build_constraints(m.x, m.obstacle_positions, cfg.safety);
      TaskModel hypo;
      hypo.k_p = ocfg.k_p;
      world.C = hypo.C(m.x);
      world.d = hypo.d(m.x);
      rep.ukf = ukf_step(rep.ukf, m, world, opts.sigma);
      UkfSample s;
      s.t = m.t;
      s.mean = rep.ukf.mean;
      s.trace_cov = rep.ukf.covariance.trace();
      s.error = (rep.ukf.mean - theta_true).norm();
      rep.ukf_samples.push_back(s);
    }
  }
  rep.area_history = rep.estimate.area_history;
  return rep;
}

}  // namespace

RunReport identify_run(const ScenarioConfig& cfg, const SimLog& log,
                       const IdentifyOptions& opts) {
  const int n = static_cast<int>(log.streams.size());
  std::vector<std::future<RobotReport>> futs;
  futs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    futs.push_back(std::async(std::launch::async, process_robot,
                              std::cref(cfg), std::cref(log), std::cref(opts),
                              i));
  RunReport report;
  report.min_separation = log.min_separation;
  for (auto& f : futs) report.robots.push_back(f.get());
  return report;
}

RunReport identify_and_write(const ScenarioConfig& cfg, const SimLog& log,
                             const IdentifyOptions& opts,
                             const std::string& out_dir) {
  RunReport report = identify_run(cfg, log, opts);
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);

  for (std::size_t i = 0; i < report.robots.size(); ++i) {
    const auto& rep = report.robots[i];
    const int ri = static_cast<int>(i);

    const auto region_path = dir / (robot_stem(cfg, "region", ri) + ".jsonl");
    write_region_jsonl(region_path.string(), rep.region_records);
    report.artifacts.push_back(region_path.string());

    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < rep.region_records.size(); ++k)
      rows.push_back({rep.region_records[k].t, rep.region_records[k].area,
                      rep.containment[k] ? 1.0 : 0.0});
    const auto sum_path = dir / (robot_stem(cfg, "summary", ri) + ".csv");
    write_csv(sum_path.string(), {"t", "area", "contains_true_theta"}, rows);
    report.artifacts.push_back(sum_path.string());

    if (opts.with_ukf) {
      std::vector<std::vector<double>> urows, crows;
      // ukf samples align 1:1 with region records
      for (std::size_t k = 0; k < rep.ukf_samples.size(); ++k) {
        const auto& s = rep.ukf_samples[k];
        urows.push_back({s.t, s.mean.x(), s.mean.y(), s.trace_cov, s.error});
        crows.push_back({s.t, rep.region_records[k].area, s.error});
      }
      const auto ukf_path = dir / (robot_stem(cfg, "ukf", ri) + ".csv");
      write_csv(ukf_path.string(),
                {"t", "mean_x", "mean_y", "trace_cov", "error_norm"}, urows);
      report.artifacts.push_back(ukf_path.string());

      const auto cmp_path = dir / (robot_stem(cfg, "compare", ri) + ".csv");
      write_csv(cmp_path.string(), {"t", "area", "ukf_error"}, crows);
      report.artifacts.push_back(cmp_path.string());
    }
  }
  return report;
}

std::vector<std::string> write_sim_artifacts(const ScenarioConfig& cfg,
                                             const SimLog& log,
                                             const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  std::vector<std::string> paths;

  for (std::size_t i = 0; i < log.streams.size(); ++i) {
    const auto p =
        dir / (robot_stem(cfg, "measurements", static_cast<int>(i)) +
               ".jsonl");
    write_measurements_jsonl(p.string(), log.streams[i]);
    paths.push_back(p.string());
  }

  std::vector<std::string> cols{"t"};
  for (std::size_t i = 0; i < cfg.robots.size(); ++i) {
    cols.push_back("x" + std::to_string(i));
    cols.push_back("y" + std::to_string(i));
  }
  std::vector<std::vector<double>> rows;
  for (const auto& ws : log.trace) {
    std::vector<double> row{ws.t};
    for (const auto& p : ws.positions) {
      row.push_back(p.x());
      row.push_back(p.y());
    }
    rows.push_back(std::move(row));
  }
  const auto trace_path = dir / (cfg.name + "_trace.csv");
  write_csv(trace_path.string(), cols, rows);
  paths.push_back(trace_path.string());

  const auto sum_path = dir / (cfg.name + "_sim.json");
  {
    std::ofstream out(sum_path);
    out << "{\"steps\": " << (log.trace.size() - 1)
        << ", \"min_separation\": " << log.min_separation << "}\n";
  }
  paths.push_back(sum_path.string());
  return paths;
}

std::vector<std::string> render_artifacts(const ScenarioConfig& cfg,
                                          const std::string& run_dir,
                                          const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path in(run_dir), out(out_dir);
  std::vector<std::string> paths;

  for (std::size_t i = 0; i < cfg.robots.size(); ++i) {
    const int ri = static_cast<int>(i);
    const auto region_path = in / (robot_stem(cfg, "region", ri) + ".jsonl");
    const auto records = read_region_jsonl(region_path.string());
    if (records.empty()) throw std::runtime_error("no data");

    std::vector<ConvexPolygon> polys;
    polys.reserve(records.size());
    for (const auto& r : records) polys.push_back(r.polygon);
    const std::string snap = svg_region_snapshots(
        polys, cfg.robots[i].goal, cfg.theta0_lo, cfg.theta0_hi,
        cfg.name + " parameter region, robot " + std::to_string(ri));
    const auto snap_path = out / (robot_stem(cfg, "regions", ri) + ".svg");
    std::ofstream(snap_path) << snap;
    paths.push_back(snap_path.string());

    std::vector<Curve> curves;
    Curve area_curve{"region area", {}};
    for (const auto& r : records) area_curve.points.emplace_back(r.t, r.area);
    curves.push_back(std::move(area_curve));

    const auto cmp_path = in / (robot_stem(cfg, "compare", ri) + ".csv");
    if (std::filesystem::exists(cmp_path)) {
      std::vector<std::string> cols;
      const auto rows = read_csv(cmp_path.string(), &cols);
      Curve err{"point-estimate error", {}};
      for (const auto& row : rows)
        if (row.size() >= 3) err.points.emplace_back(row[0], row[2]);
      curves.push_back(std::move(err));
    }
    const std::string plot =
        svg_curves(curves, cfg.name + " convergence, robot " +
                               std::to_string(ri));
    const auto plot_path = out / (robot_stem(cfg, "curves", ri) + ".svg");
    std::ofstream(plot_path) << plot;
    paths.push_back(plot_path.string());
  }
  return paths;
}

}  // namespace regionid
