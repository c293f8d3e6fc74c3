#include "regionid/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace regionid {

namespace {

using nlohmann::json;

json vec2_to_json(const Vec2& v) { return json::array({v.x(), v.y()}); }

Vec2 vec2_from_json(const json& j) {
  return Vec2(j.at(0).get<double>(), j.at(1).get<double>());
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return in;
}

}  // namespace

ScenarioConfig scenario_from_json_text(const std::string& text) {
  const json j = json::parse(text);
  ScenarioConfig cfg;
  cfg.name = j.value("name", std::string("scenario"));
  for (const auto& r : j.at("robots")) {
    RobotSpec spec;
    spec.start = vec2_from_json(r.at("start"));
    spec.goal = vec2_from_json(r.at("goal"));
    spec.k_p = r.value("k_p", 1.0);
    cfg.robots.push_back(spec);
  }
  if (j.contains("static_obstacles"))
    for (const auto& s : j.at("static_obstacles"))
      cfg.static_obstacles.push_back(vec2_from_json(s));
  if (j.contains("safety")) {
    const auto& s = j.at("safety");
    cfg.safety.D_s = s.value("D_s", cfg.safety.D_s);
    cfg.safety.gamma = s.value("gamma", cfg.safety.gamma);
    cfg.safety.epsilon = s.value("epsilon", cfg.safety.epsilon);
  }
  cfg.dt = j.value("dt", cfg.dt);
  cfg.duration = j.value("duration", cfg.duration);
  if (j.contains("theta0")) {
    cfg.theta0_lo = vec2_from_json(j.at("theta0").at("lo"));
    cfg.theta0_hi = vec2_from_json(j.at("theta0").at("hi"));
  }
  cfg.seed = j.value("seed", cfg.seed);
  if (cfg.robots.empty()) throw std::runtime_error("scenario has no robots");
  if (cfg.dt <= 0.0) throw std::runtime_error("dt must be positive");
  return cfg;
}

std::string scenario_to_json_text(const ScenarioConfig& cfg) {
  json j;
  j["name"] = cfg.name;
  j["robots"] = json::array();
  for (const auto& r : cfg.robots)
    j["robots"].push_back({{"start", vec2_to_json(r.start)},
                           {"goal", vec2_to_json(r.goal)},
                           {"k_p", r.k_p}});
  j["static_obstacles"] = json::array();
  for (const auto& s : cfg.static_obstacles)
    j["static_obstacles"].push_back(vec2_to_json(s));
  j["safety"] = {{"D_s", cfg.safety.D_s},
                 {"gamma", cfg.safety.gamma},
                 {"epsilon", cfg.safety.epsilon}};
  j["dt"] = cfg.dt;
  j["duration"] = cfg.duration;
  j["theta0"] = {{"lo", vec2_to_json(cfg.theta0_lo)},
                 {"hi", vec2_to_json(cfg.theta0_hi)}};
  j["seed"] = cfg.seed;
  return j.dump(2) + "\n";
}

ScenarioConfig load_scenario(const std::string& path) {
  auto in = open_in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json_text(buf.str());
}

void write_measurements_jsonl(const std::string& path,
                              const std::vector<Measurement>& stream) {
  auto out = open_out(path);
  for (const auto& m : stream) {
    json j;
    j["t"] = m.t;
    j["x"] = vec2_to_json(m.x);
    j["u"] = vec2_to_json(m.u_star);
    j["obstacles"] = json::array();
    for (const auto& o : m.obstacle_positions)
      j["obstacles"].push_back(vec2_to_json(o));
    out << j.dump() << "\n";
  }
}

std::vector<Measurement> read_measurements_jsonl(const std::string& path) {
  auto in = open_in(path);
  std::vector<Measurement> stream;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    Measurement m;
    m.t = j.at("t").get<double>();
    m.x = vec2_from_json(j.at("x"));
    m.u_star = vec2_from_json(j.at("u"));
    for (const auto& o : j.at("obstacles"))
      m.obstacle_positions.push_back(vec2_from_json(o));
    stream.push_back(std::move(m));
  }
  return stream;
}

namespace {

json halfspace_to_json(const Halfspace& h) {
  json n = json::array();
  for (int i = 0; i < h.dim(); ++i) n.push_back(h.normal(i));
  return {{"n", n}, {"c", h.offset}, {"strict", h.strict}};
}

Halfspace halfspace_from_json(const json& j) {
  const auto& n = j.at("n");
  VecX normal(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) normal(i) = n.at(i).get<double>();
  return Halfspace(std::move(normal), j.at("c").get<double>(),
                   j.value("strict", false));
}

}  // namespace

void write_region_jsonl(const std::string& path,
                        const std::vector<RegionRecord>& records) {
  auto out = open_out(path);
  for (const auto& r : records) {
    json j;
    j["t"] = r.t;
    j["case"] = std::string(1, r.case_id);
    j["active"] = r.active;
    j["omega"] = json::array();
    for (const auto& h : r.omega.rows) j["omega"].push_back(halfspace_to_json(h));
    j["polygon"] = json::array();
    for (const auto& v : r.polygon.vertices())
      j["polygon"].push_back(vec2_to_json(v));
    j["area"] = r.area;
    j["skipped"] = r.skipped;
    out << j.dump() << "\n";
  }
}

std::vector<RegionRecord> read_region_jsonl(const std::string& path) {
  auto in = open_in(path);
  std::vector<RegionRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    RegionRecord r;
    r.t = j.at("t").get<double>();
    r.case_id = j.at("case").get<std::string>().at(0);
    r.active = j.at("active").get<std::vector<int>>();
    r.omega.dim = 2;
    for (const auto& h : j.at("omega")) r.omega.add(halfspace_from_json(h));
    std::vector<Vec2> verts;
    for (const auto& v : j.at("polygon")) verts.push_back(vec2_from_json(v));
    r.polygon = ConvexPolygon(std::move(verts));
    r.area = j.at("area").get<double>();
    r.skipped = j.value("skipped", false);
    records.push_back(std::move(r));
  }
  return records;
}

void write_csv(const std::string& path, const std::vector<std::string>& cols,
               const std::vector<std::vector<double>>& rows) {
  auto out = open_out(path);
  for (std::size_t i = 0; i < cols.size(); ++i)
    out << (i ? "," : "") << cols[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << format_double(row[i]);
    out << "\n";
  }
}

std::vector<std::vector<double>> read_csv(const std::string& path,
                                          std::vector<std::string>* cols) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("no data");
  if (cols) {
    cols->clear();
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) cols->push_back(cell);
  }
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace regionid
