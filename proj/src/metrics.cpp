#include "lls/metrics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "lls/traffic.hpp"

namespace lls {

std::optional<double> jain_index(std::span<const double> values) {
  if (values.empty()) return std::nullopt;
  double sum = 0.0, sum_sq = 0.0;
  for (double v : values) {
    sum += v;
    sum_sq += v * v;
  }
  if (sum_sq <= 0.0) return std::nullopt;
  return sum * sum / (static_cast<double>(values.size()) * sum_sq);
}

double user_mean_rate_bps(const UserTrace& t) {
  return t.measured_s > 0.0 ? t.total_bits / t.measured_s : 0.0;
}

double network_throughput(std::span<const UserTrace> traces) {
  double sum = 0.0;
  for (const auto& t : traces) sum += user_mean_rate_bps(t);
  return sum;
}

std::optional<double> slot_percentile_throughput(std::span<const UserTrace> traces,
                                                 int pct) {
  assert(pct >= 1 && pct <= 100);
  double sum = 0.0;
  int counted = 0;
  std::vector<double> bins;
  for (const auto& t : traces) {
    if (t.bins.size() < 10) continue;
    bins.clear();
    bins.reserve(t.bins.size());
    for (const auto& b : t.bins) bins.push_back(b.bits);  // 1 s bin -> bits/s
    std::sort(bins.begin(), bins.end());
    const auto n = static_cast<double>(bins.size());
    const auto rank = static_cast<size_t>(std::ceil(pct / 100.0 * n));  // 1-based
    sum += bins[rank - 1];
    ++counted;
  }
  if (counted == 0) return std::nullopt;
  return sum / counted;
}

double log_sum_rate(std::span<const UserTrace> traces, double rate_floor_bps) {
  double sum = 0.0;
  for (const auto& t : traces)
    sum += std::log(std::max(user_mean_rate_bps(t), rate_floor_bps));
  return sum;
}

std::pair<double, std::optional<double>> freezing_metrics(
    std::span<const UserTrace> traces) {
  std::vector<double> fractions;
  for (const auto& t : traces) {
    if (t.session_s <= 0.0) continue;  // playback never started
    fractions.push_back(freeze_fraction(FreezeStats{t.frozen_s, t.session_s}));
  }
  if (fractions.empty()) return {0.0, std::nullopt};
  double mean = 0.0;
  for (double f : fractions) mean += f;
  mean /= static_cast<double>(fractions.size());
  return {mean, jain_index(fractions)};
}

MetricsReport build_report(std::span<const UserTrace> traces,
                           double rate_floor_bps) {
  MetricsReport r;
  r.t_net_bps = network_throughput(traces);
  std::vector<double> means;
  means.reserve(traces.size());
  for (const auto& t : traces) means.push_back(user_mean_rate_bps(t));
  r.j_net = jain_index(means);
  r.t_slot10_bps = slot_percentile_throughput(traces, 10);
  auto [f_avg, j_f] = freezing_metrics(traces);
  r.f_lt_avg = f_avg;
  r.j_f_net = j_f;
  r.r_log_net = log_sum_rate(traces, rate_floor_bps);
  return r;
}

}  // namespace lls
