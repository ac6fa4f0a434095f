#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lls {

// One user is served per cell per TTI; a cell with no eligible user idles.
constexpr int kIdleTti = -1;

enum class Rule {
  MaxRate,      // highest instantaneous rate
  PfShort,      // r / short-window average
  PfLong,       // r / long-window average
  Exp,          // PF-short times the exponential queue factor
  LlPfExp,      // r / long avg, exponential boost for low normalized short rate
  LlPfSig,      // r / long avg, sigmoid utility of normalized short rate
  LlExp,        // EXP with the long-window (cross-cell) average
  LlExpFreeze,  // r times carried freeze fraction times queue factor
};

const char* rule_name(Rule r);
std::optional<Rule> parse_rule(std::string_view name);
bool rule_uses_queue(Rule r);
bool rule_uses_long_avg(Rule r);

struct SchedulerParams {
  double w_short_s = 1.0;     // short averaging window, seconds
  double w_long_s = 300.0;    // long averaging window, seconds
  double alpha = 0.1;         // exponential-utility aggressiveness
  double beta = 0.5;          // sigmoid inflection point
  double steepness = 10.0;    // sigmoid steepness c
  double queue_weight = 1.0;  // a_i, uniform across users
  double queue_scale = 1e-6;  // queue bits -> Mbit inside the exponent
  double rate_floor_bps = 1e3;
  double freeze_floor = 0.01;
  bool sigmoid_mirrored = false;  // opt-in decreasing variant, see utility_sigmoid_mirrored
  Rule rule = Rule::PfShort;
};

// Per-user inputs to a weight rule, all referring to the same TTI.
struct Observables {
  double inst_rate_bps = 0.0;  // CQI-reported achievable rate
  double short_avg_bps = 0.0;
  double long_avg_bps = 0.0;   // carried across cells in multi-cell mode
  double norm_short = 1.0;     // short avg / cell max, clamped to [0.05, 1]
  double queue_bits = 0.0;
  double freeze = 0.0;         // lifetime fraction of playback spent frozen
};

// avg' = (1/W) * rate * scheduled + (1 - 1/W) * avg, W in slots.
double update_moving_average(double avg_bps, double inst_rate_bps,
                             int scheduled, double window_slots);

// Divide by the cell's max short average, clamp to [0.05, 1].
// All-zero input degenerates to the 0.05 floor for everyone.
std::vector<double> normalize_short_rates(std::span<const double> short_avgs_bps);
void normalize_short_rates_into(std::span<const double> short_avgs_bps,
                                std::span<double> out);

double utility_exp(double x, double alpha);               // exp(alpha / x)
double utility_sigmoid(double x, double beta, double c);  // 1 - exp(-c (x - beta))
double utility_sigmoid_mirrored(double x, double beta, double c);  // 1 + exp(-c (x - beta))

// exp[(a_i q_i - mean) / (1 + sqrt(mean))], queues rescaled by `queue_scale`
// first (Mbit at the default) so the exponent stays O(1).
std::vector<double> exp_queue_factor(std::span<const double> queues_bits,
                                     std::span<const double> queue_weights,
                                     double queue_scale);
void exp_queue_factor_into(std::span<const double> queues_bits,
                           std::span<const double> queue_weights,
                           double queue_scale, std::span<double> out);

double weight_mr(const Observables& obs);
double weight_pf_short(const Observables& obs, const SchedulerParams& p);
double weight_pf_long(const Observables& obs, const SchedulerParams& p);
double weight_exp(const Observables& obs, const SchedulerParams& p, double queue_factor);
double weight_ll_pf_exp(const Observables& obs, const SchedulerParams& p);
double weight_ll_pf_sig(const Observables& obs, const SchedulerParams& p);
double weight_ll_exp(const Observables& obs, const SchedulerParams& p, double queue_factor);
double weight_ll_exp_freeze(const Observables& obs, const SchedulerParams& p,
                            double queue_factor);

// Weights for all competing users of one cell under p.rule. norm_short must
// already be filled in; the queue factor is computed here over this set.
std::vector<double> cell_weights(std::span<const Observables> obs,
                                 const SchedulerParams& p);

// Argmax index, ties to the lowest index; empty input -> kIdleTti.
int select_user(std::span<const double> weights);

// Reusable-buffer wrapper around the weight rules for the per-TTI loop.
class CellScheduler {
 public:
  explicit CellScheduler(const SchedulerParams& p) : p_(p) {}
  const SchedulerParams& params() const { return p_; }

  // Weights under p.rule; norm_short must already be filled in.
  void weights(std::span<const Observables> obs, std::span<double> out);

  // Fill norm_short from the short averages, compute weights, return the
  // winner's index within obs (kIdleTti when obs is empty).
  int pick(std::span<Observables> obs);

  std::span<const double> last_weights() const { return {w_.data(), n_}; }

 private:
  SchedulerParams p_;
  std::size_t n_ = 0;
  std::vector<double> shorts_, queues_, a_, qf_, w_;
};

}  // namespace lls
