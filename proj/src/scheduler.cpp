#include "lls/scheduler.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace lls {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::MaxRate: return "mr";
    case Rule::PfShort: return "pf-short";
    case Rule::PfLong: return "pf-long";
    case Rule::Exp: return "exp";
    case Rule::LlPfExp: return "ll-pf-exp";
    case Rule::LlPfSig: return "ll-pf-sig";
    case Rule::LlExp: return "ll-exp";
    case Rule::LlExpFreeze: return "ll-exp-freeze";
  }
  return "?";
}

std::optional<Rule> parse_rule(std::string_view name) {
  for (Rule r : {Rule::MaxRate, Rule::PfShort, Rule::PfLong, Rule::Exp,
                 Rule::LlPfExp, Rule::LlPfSig, Rule::LlExp, Rule::LlExpFreeze}) {
    if (name == rule_name(r)) return r;
  }
  return std::nullopt;
}

bool rule_uses_queue(Rule r) {
  return r == Rule::Exp || r == Rule::LlExp || r == Rule::LlExpFreeze;
}

bool rule_uses_long_avg(Rule r) {
  return r == Rule::PfLong || r == Rule::LlPfExp || r == Rule::LlPfSig ||
         r == Rule::LlExp;
}

double update_moving_average(double avg_bps, double inst_rate_bps, int scheduled,
                             double window_slots) {
  assert(window_slots >= 1.0);
  const double w = 1.0 / window_slots;
  return w * inst_rate_bps * static_cast<double>(scheduled) + (1.0 - w) * avg_bps;
}

void normalize_short_rates_into(std::span<const double> short_avgs_bps,
                                std::span<double> out) {
  assert(out.size() == short_avgs_bps.size());
  if (short_avgs_bps.empty()) return;
  const double mx = *std::max_element(short_avgs_bps.begin(), short_avgs_bps.end());
  if (mx <= 0.0) {  // degenerate: everyone at the floor
    std::fill(out.begin(), out.end(), 0.05);
    return;
  }
  for (size_t i = 0; i < short_avgs_bps.size(); ++i)
    out[i] = std::clamp(short_avgs_bps[i] / mx, 0.05, 1.0);
}

std::vector<double> normalize_short_rates(std::span<const double> short_avgs_bps) {
  std::vector<double> out(short_avgs_bps.size());
  normalize_short_rates_into(short_avgs_bps, out);
  return out;
}

double utility_exp(double x, double alpha) { return std::exp(alpha / x); }

double utility_sigmoid(double x, double beta, double c) {
  return 1.0 - std::exp(-c * (x - beta));
}

double utility_sigmoid_mirrored(double x, double beta, double c) {
  return 1.0 + std::exp(-c * (x - beta));
}

void exp_queue_factor_into(std::span<const double> queues_bits,
                           std::span<const double> queue_weights,
                           double queue_scale, std::span<double> out) {
  assert(!queues_bits.empty() && queues_bits.size() == queue_weights.size() &&
         out.size() == queues_bits.size());
  const size_t n = queues_bits.size();
  double mean = 0.0;
  for (size_t i = 0; i < n; ++i) {
    out[i] = queue_weights[i] * queues_bits[i] * queue_scale;  // a_i q_i, scaled
    mean += out[i];
  }
  mean /= static_cast<double>(n);
  const double denom = 1.0 + std::sqrt(mean);
  for (size_t i = 0; i < n; ++i) out[i] = std::exp((out[i] - mean) / denom);
}

std::vector<double> exp_queue_factor(std::span<const double> queues_bits,
                                     std::span<const double> queue_weights,
                                     double queue_scale) {
  std::vector<double> out(queues_bits.size());
  exp_queue_factor_into(queues_bits, queue_weights, queue_scale, out);
  return out;
}

namespace {
double floored(double avg, const SchedulerParams& p) {
  return std::max(avg, p.rate_floor_bps);
}
}  // namespace

double weight_mr(const Observables& obs) { return obs.inst_rate_bps; }

double weight_pf_short(const Observables& obs, const SchedulerParams& p) {
  return obs.inst_rate_bps / floored(obs.short_avg_bps, p);
}

double weight_pf_long(const Observables& obs, const SchedulerParams& p) {
  return obs.inst_rate_bps / floored(obs.long_avg_bps, p);
}

double weight_exp(const Observables& obs, const SchedulerParams& p,
                  double queue_factor) {
  return weight_pf_short(obs, p) * queue_factor;
}

double weight_ll_pf_exp(const Observables& obs, const SchedulerParams& p) {
  return weight_pf_long(obs, p) * utility_exp(obs.norm_short, p.alpha);
}

double weight_ll_pf_sig(const Observables& obs, const SchedulerParams& p) {
  const double u = p.sigmoid_mirrored
                       ? utility_sigmoid_mirrored(obs.norm_short, p.beta, p.steepness)
                       : utility_sigmoid(obs.norm_short, p.beta, p.steepness);
  return weight_pf_long(obs, p) * u;
}

double weight_ll_exp(const Observables& obs, const SchedulerParams& p,
                     double queue_factor) {
  return weight_pf_long(obs, p) * queue_factor;
}

double weight_ll_exp_freeze(const Observables& obs, const SchedulerParams& p,
                            double queue_factor) {
  return obs.inst_rate_bps * std::max(obs.freeze, p.freeze_floor) * queue_factor;
}

void CellScheduler::weights(std::span<const Observables> obs, std::span<double> out) {
  assert(out.size() == obs.size());
  const size_t n = obs.size();
  if (n == 0) return;

  if (rule_uses_queue(p_.rule)) {
    queues_.resize(n);
    for (size_t i = 0; i < n; ++i) queues_[i] = obs[i].queue_bits;
    a_.assign(n, p_.queue_weight);
    qf_.resize(n);
    exp_queue_factor_into(queues_, a_, p_.queue_scale, qf_);
  }

  for (size_t i = 0; i < n; ++i) {
    switch (p_.rule) {
      case Rule::MaxRate: out[i] = weight_mr(obs[i]); break;
      case Rule::PfShort: out[i] = weight_pf_short(obs[i], p_); break;
      case Rule::PfLong: out[i] = weight_pf_long(obs[i], p_); break;
      case Rule::Exp: out[i] = weight_exp(obs[i], p_, qf_[i]); break;
      case Rule::LlPfExp: out[i] = weight_ll_pf_exp(obs[i], p_); break;
      case Rule::LlPfSig: out[i] = weight_ll_pf_sig(obs[i], p_); break;
      case Rule::LlExp: out[i] = weight_ll_exp(obs[i], p_, qf_[i]); break;
      case Rule::LlExpFreeze: out[i] = weight_ll_exp_freeze(obs[i], p_, qf_[i]); break;
    }
  }
}

int CellScheduler::pick(std::span<Observables> obs) {
  n_ = obs.size();
  if (n_ == 0) return kIdleTti;
  shorts_.resize(n_);
  for (size_t i = 0; i < n_; ++i) shorts_[i] = obs[i].short_avg_bps;
  w_.resize(n_);  // reuse w_ as the norm buffer before overwriting with weights
  normalize_short_rates_into(shorts_, w_);
  for (size_t i = 0; i < n_; ++i) obs[i].norm_short = w_[i];
  weights(obs, w_);
  return select_user({w_.data(), n_});
}

std::vector<double> cell_weights(std::span<const Observables> obs,
                                 const SchedulerParams& p) {
  std::vector<double> w(obs.size());
  CellScheduler cs(p);
  cs.weights(obs, w);
  return w;
}

int select_user(std::span<const double> weights) {
  if (weights.empty()) return kIdleTti;
  size_t best = 0;
  for (size_t i = 1; i < weights.size(); ++i)
    if (weights[i] > weights[best]) best = i;
  return static_cast<int>(best);
}

}  // namespace lls
