#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lls/config.hpp"
#include "lls/handover.hpp"
#include "lls/metrics.hpp"

namespace lls {

// Per-TTI instrumentation row for one traced user (tests, debugging).
struct TtiRow {
  double used_rate_bps = 0.0;     // CQI the scheduler saw this TTI
  double sampled_rate_bps = 0.0;  // fresh sample taken for the next TTI
  int scheduled = 0;
  int serving_cell = 0;
  double short_avg_bps = 0.0;  // state after this TTI completed
  double long_avg_bps = 0.0;
  double queue_bits = 0.0;
};

struct RunOptions {
  std::vector<int> trace_users;  // per-TTI rows recorded for these user ids
};

struct RunLog {
  MetricsReport report;
  std::vector<UserTrace> traces;  // one per user, measurement window only
  std::vector<HandoverRecord> handovers;  // whole run, in time order
  std::vector<std::pair<std::string, std::string>> config_echo;
  std::uint64_t seed = 0;
  // Fingerprint of all environment randomness (positions, shadowing, fading,
  // association). Equal digests across two runs mean the users saw the same
  // world — the common-random-numbers contract between scheduler rules.
  std::uint64_t env_digest = 0;
  int cells = 0;
  double measured_s = 0.0;

  // Initial (first-sample) averages, one per user.
  std::vector<double> init_short_avg_bps;
  std::vector<double> init_long_avg_bps;

  // Conservation bookkeeping, one entry per user (cbr runs).
  std::vector<double> arrived_bits;
  std::vector<double> delivered_bits;
  std::vector<double> queue_bits;      // left in the BS queue at the end
  std::vector<double> consumed_s;      // media seconds played out
  std::vector<double> buffer_s;        // media seconds left in the buffer

  // Parallel to RunOptions::trace_users.
  std::vector<std::vector<TtiRow>> tti_trace;
};

RunLog run(const ScenarioConfig& cfg, const RunOptions& opts = {});

}  // namespace lls
