#pragma once

#include <string>
#include <vector>

#include "regionid/observer.hpp"
#include "regionid/sim.hpp"

namespace regionid {

/// One observer step as logged to disk.
struct RegionRecord {
  double t = 0.0;
  char case_id = 'A';
  std::vector<int> active;
  HalfspaceSet omega;
  ConvexPolygon polygon;
  double area = 0.0;
  bool skipped = false;
};

ScenarioConfig scenario_from_json_text(const std::string& text);
std::string scenario_to_json_text(const ScenarioConfig& cfg);
ScenarioConfig load_scenario(const std::string& path);

void write_measurements_jsonl(const std::string& path,
                              const std::vector<Measurement>& stream);
std::vector<Measurement> read_measurements_jsonl(const std::string& path);

void write_region_jsonl(const std::string& path,
                        const std::vector<RegionRecord>& records);
std::vector<RegionRecord> read_region_jsonl(const std::string& path);

/// Plain numeric CSV with %.17g cells (bit-stable round trips).
void write_csv(const std::string& path, const std::vector<std::string>& cols,
               const std::vector<std::vector<double>>& rows);
std::vector<std::vector<double>> read_csv(const std::string& path,
                                          std::vector<std::string>* cols);

}  // namespace regionid
