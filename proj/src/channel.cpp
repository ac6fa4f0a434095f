#include "lls/channel.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace lls {

double path_loss_db(double d_km) {
  d_km = std::max(d_km, 0.01);
  return 128.1 + 37.6 * std::log10(d_km);
}

double sample_shadowing_db(RngStream& rng, double std_db) {
  return rng.normal(0.0, std_db);
}

double sample_fading_gain(RngStream& rng) { return rng.exponential(1.0); }

double noise_power_w(const ChannelConfig& cfg) {
  const double dbm = cfg.noise_density_dbm_hz + 10.0 * std::log10(cfg.bandwidth_hz) +
                     cfg.noise_figure_db;
  return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double rx_power_w(double tx_w, double pl_db, double shadow_db) {
  return tx_w * std::pow(10.0, -(pl_db + shadow_db) / 10.0);
}

double clip_sinr(double sinr_linear, double clip_db) {
  return std::min(sinr_linear, std::pow(10.0, clip_db / 10.0));
}

double achievable_rate_bps(double sinr_linear, double bandwidth_hz) {
  return bandwidth_hz * std::log2(1.0 + sinr_linear);
}

double compute_sinr(const Position& user, int serving, const HexNetwork& net,
                    std::span<const double> shadow_db, double fading_gain,
                    const ChannelConfig& cfg, std::span<const unsigned char> active) {
  const int m = static_cast<int>(net.cell_centers.size());
  assert(serving >= 0 && serving < m);
  assert(static_cast<int>(shadow_db.size()) == m);

  const double pl_s = path_loss_db(distance(user, net.cell_centers[serving]) / 1000.0);
  const double signal = rx_power_w(cfg.tx_power_w, pl_s, shadow_db[serving]) * fading_gain;

  double interference = 0.0;
  if (cfg.interference == InterferenceMode::FullReuse) {
    for (int b = 0; b < m; ++b) {
      if (b == serving) continue;
      if (!active.empty() && !active[b]) continue;
      const double pl = path_loss_db(distance(user, net.cell_centers[b]) / 1000.0);
      interference += rx_power_w(cfg.tx_power_w, pl, shadow_db[b]);
    }
  }
  const double sinr = signal / (noise_power_w(cfg) + interference);
  return clip_sinr(sinr, cfg.sinr_clip_db);
}

LinkSample compute_link(const Position& user, int serving, const HexNetwork& net,
                        std::span<const double> shadow_db, double fading_gain,
                        const ChannelConfig& cfg, std::span<const unsigned char> active) {
  LinkSample s;
  s.path_loss_db = path_loss_db(distance(user, net.cell_centers[serving]) / 1000.0);
  s.shadowing_db = shadow_db[serving];
  s.fading_gain = fading_gain;
  s.sinr = compute_sinr(user, serving, net, shadow_db, fading_gain, cfg, active);
  s.rate_bps = achievable_rate_bps(s.sinr, cfg.bandwidth_hz);
  return s;
}

}  // namespace lls
