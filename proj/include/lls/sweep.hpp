#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lls/config.hpp"
#include "lls/metrics.hpp"

namespace lls {

struct SweepSpec {
  ScenarioConfig base;
  std::string axis;  // alias (W, alpha, N, ...) or full dotted key
  std::vector<std::string> values;
  std::vector<std::uint64_t> seeds;
  bool write_outputs = true;  // per-run report/bins/handover/manifest files
};

struct SweepRow {
  std::string value;
  std::uint64_t seed = 0;
  MetricsReport report;
  std::string run_dir;  // empty when per-run outputs were not written
};

// Cartesian values x seeds, one engine instance per run. summary.csv in
// out_dir grows one row per finished run, so partial sweeps are usable.
std::vector<SweepRow> sweep(const SweepSpec& spec, const std::string& out_dir);

}  // namespace lls
