#pragma once

#include <span>

#include "lls/geometry.hpp"
#include "lls/rng.hpp"

namespace lls {

enum class InterferenceMode { FullReuse, NoiseLimited };

struct ChannelConfig {
  double carrier_hz = 2.0e9;  // informational only
  double bandwidth_hz = 10.0e6;
  double tx_power_w = 40.0;
  double noise_density_dbm_hz = -174.0;
  double noise_figure_db = 9.0;
  double shadowing_std_db = 8.0;
  double shadow_redraw_m = 50.0;  // shadowing decorrelation distance
  double sinr_clip_db = 20.0;
  InterferenceMode interference = InterferenceMode::FullReuse;
};

// Macro-cell path loss, d in km; inputs below 10 m are clamped to 10 m.
double path_loss_db(double d_km);

// Zero-mean Gaussian in the dB domain (log-normal slow fading).
double sample_shadowing_db(RngStream& rng, double std_db);

// Rayleigh envelope squared: exponential power gain with mean 1.
double sample_fading_gain(RngStream& rng);

double noise_power_w(const ChannelConfig& cfg);

// tx * 10^(-(PL + shadow)/10)
double rx_power_w(double tx_w, double pl_db, double shadow_db);

double clip_sinr(double sinr_linear, double clip_db);

// Shannon rate with the SINR already clipped.
double achievable_rate_bps(double sinr_linear, double bandwidth_hz);

struct LinkSample {
  double path_loss_db = 0;
  double shadowing_db = 0;
  double fading_gain = 1;
  double sinr = 0;  // linear, post-clip
  double rate_bps = 0;
};

// Full-reuse interference sums all other BSs at full power with the fast
// fading averaged out; `active` (one flag per BS, empty = all on) masks cells
// that are not transmitting this TTI.
double compute_sinr(const Position& user, int serving, const HexNetwork& net,
                    std::span<const double> shadow_db, double fading_gain,
                    const ChannelConfig& cfg,
                    std::span<const unsigned char> active = {});

LinkSample compute_link(const Position& user, int serving, const HexNetwork& net,
                        std::span<const double> shadow_db, double fading_gain,
                        const ChannelConfig& cfg,
                        std::span<const unsigned char> active = {});

}  // namespace lls
