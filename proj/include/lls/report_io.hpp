#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lls/engine.hpp"

namespace lls {

// Everything lands in `dir` (created if missing): report.json, bins.csv,
// handover.csv, manifest.json. Output bytes are a pure function of the
// RunLog: same log, same bytes.
void write_run_outputs(const std::string& dir, const RunLog& log);

void write_report_json(const std::string& path, const RunLog& log);
void write_bins_csv(const std::string& path, const RunLog& log);
void write_handover_csv(const std::string& path, const RunLog& log);
void write_manifest_json(const std::string& path, const RunLog& log);

// Round-trip view of a persisted run: per-user aggregates and bins restored
// exactly as written, so metrics can be recomputed and compared bit-for-bit.
struct ParsedRun {
  MetricsReport report;
  std::vector<UserTrace> traces;
  std::vector<HandoverRecord> handovers;
  std::uint64_t seed = 0;
  std::uint64_t env_digest = 0;
  double measured_s = 0.0;
};

ParsedRun read_run_outputs(const std::string& dir);

}  // namespace lls
