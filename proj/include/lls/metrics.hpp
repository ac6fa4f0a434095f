#pragma once

#include <optional>
#include <span>
#include <vector>

namespace lls {

// One measurement bin: a single second of one user's service.
struct BinRow {
  double bits = 0.0;      // bits served during the bin
  int serving_cell = 0;   // cell at bin close
  bool frozen = false;    // playback spent any part of the bin frozen
};

// Everything measured for one user after warm-up.
struct UserTrace {
  std::vector<BinRow> bins;
  double total_bits = 0.0;
  double measured_s = 0.0;
  double frozen_s = 0.0;   // in-window playback stall time
  double session_s = 0.0;  // in-window playback session time
  int handovers = 0;
};

struct MetricsReport {
  double t_net_bps = 0.0;                 // sum of exact per-user mean rates
  std::optional<double> j_net;            // Jain over mean rates
  std::optional<double> t_slot10_bps;     // mean over users of 10th pct bin
  double f_lt_avg = 0.0;                  // mean freeze fraction
  std::optional<double> j_f_net;          // Jain over freeze fractions
  double r_log_net = 0.0;                 // sum of ln(mean rate), nats
};

// (sum x)^2 / (n * sum x^2); absent for empty or all-zero input.
std::optional<double> jain_index(std::span<const double> values);

double user_mean_rate_bps(const UserTrace& t);
double network_throughput(std::span<const UserTrace> traces);

// Nearest-rank percentile of a user's one-second bins (bits/s). Users with
// fewer than 10 bins are excluded; absent when nobody qualifies.
std::optional<double> slot_percentile_throughput(std::span<const UserTrace> traces,
                                                 int pct);

double log_sum_rate(std::span<const UserTrace> traces, double rate_floor_bps);

// Mean freeze fraction and Jain over the per-user fractions (absent when no
// user froze). Users that never started a playback session are skipped.
std::pair<double, std::optional<double>> freezing_metrics(
    std::span<const UserTrace> traces);

MetricsReport build_report(std::span<const UserTrace> traces, double rate_floor_bps);

}  // namespace lls
