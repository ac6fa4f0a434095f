#include "lls/engine.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "lls/channel.hpp"
#include "lls/geometry.hpp"
#include "lls/rng.hpp"
#include "lls/scheduler.hpp"
#include "lls/traffic.hpp"

namespace lls {

namespace {

std::uint64_t fold(std::uint64_t digest, double v) {
  return mix64(digest ^ std::bit_cast<std::uint64_t>(v));
}

std::uint64_t fold_u(std::uint64_t digest, std::uint64_t v) {
  return mix64(digest ^ v);
}

struct UserState {
  MobilityState mob;
  Position last_shadow_pos;
  int serving = -1;
  UserQos qos;
  double cqi_bps = 0.0;  // sampled last TTI, consumed this TTI
  BsQueue queue;
  PlaybackBuffer buf;
  FreezeStats life;  // whole lifetime, including injected prior history
  FreezeStats win;   // measurement window only
  double arrived_bits = 0.0;
  double delivered_bits = 0.0;
  int handovers_in_window = 0;
};

}  // namespace

RunLog run(const ScenarioConfig& cfg, const RunOptions& opts) {
  validate(cfg);

  const HexNetwork net =
      cfg.layout.kind == LayoutKind::HexRings
          ? build_hex_layout(cfg.layout.rings, cfg.layout.spacing_m)
          : build_line_layout(cfg.layout.cells, cfg.layout.spacing_m);
  const int m = static_cast<int>(net.cell_centers.size());
  const int n = cfg.users;

  ChannelConfig ch = cfg.channel;
  ch.bandwidth_hz = effective_bandwidth_hz(cfg);
  const double noise_w = noise_power_w(ch);
  const bool full_reuse = ch.interference == InterferenceMode::FullReuse;
  const bool cbr = cfg.traffic.mode == TrafficMode::Cbr;

  const double tti = cfg.tti_s;
  const long long total_ttis = std::llround(cfg.sim_time_s / tti);
  const long long warm_tti = std::llround(cfg.warm_up_s / tti);
  const long long ttis_per_s = std::max(1ll, std::llround(1.0 / tti));
  const long long mob_period = std::max(1ll, std::llround(0.1 / tti));
  const double mob_dt = static_cast<double>(mob_period) * tti;
  const double w_short_slots = cfg.sched.w_short_s / tti;
  const double w_long_slots = cfg.sched.w_long_s / tti;
  const double floor_bps = cfg.sched.rate_floor_bps;

  RunLog log;
  log.seed = cfg.seed;
  log.config_echo = echo_config(cfg);
  log.cells = m;
  log.measured_s = static_cast<double>(total_ttis - warm_tti) * tti;
  log.traces.resize(static_cast<size_t>(n));

  std::vector<int> trace_slot(static_cast<size_t>(n), -1);
  log.tti_trace.resize(opts.trace_users.size());
  for (size_t i = 0; i < opts.trace_users.size(); ++i) {
    const int u = opts.trace_users[i];
    if (u < 0 || u >= n) throw std::invalid_argument("trace user out of range");
    trace_slot[static_cast<size_t>(u)] = static_cast<int>(i);
    log.tti_trace[i].reserve(static_cast<size_t>(total_ttis));
  }

  std::vector<UserState> us(static_cast<size_t>(n));
  std::vector<double> shadow(static_cast<size_t>(n) * m);
  std::vector<double> gain(static_cast<size_t>(n) * m);
  std::vector<RngStream> wp_rng, shadow_rng, fade_rng;
  wp_rng.reserve(static_cast<size_t>(n));
  shadow_rng.reserve(static_cast<size_t>(n));
  fade_rng.reserve(static_cast<size_t>(n));
  std::uint64_t digest = 0;

  // One flag per cell: does it transmit this TTI? All on for the initial
  // sample; per-TTI it tracks which cells have someone to serve.
  std::vector<unsigned char> active(static_cast<size_t>(m), 1);

  const auto redraw_shadow = [&](int u) {
    for (int b = 0; b < m; ++b) {
      const double s = sample_shadowing_db(shadow_rng[static_cast<size_t>(u)],
                                           ch.shadowing_std_db);
      shadow[static_cast<size_t>(u) * m + b] = s;
      digest = fold(digest, s);
    }
    us[static_cast<size_t>(u)].last_shadow_pos = us[static_cast<size_t>(u)].mob.position;
  };

  const auto recompute_gains = [&](int u) {
    for (int b = 0; b < m; ++b) {
      const double d_km =
          distance(us[static_cast<size_t>(u)].mob.position, net.cell_centers[b]) / 1000.0;
      gain[static_cast<size_t>(u) * m + b] =
          rx_power_w(ch.tx_power_w, path_loss_db(d_km),
                     shadow[static_cast<size_t>(u) * m + b]);
    }
  };

  // Same arithmetic and summation order as compute_sinr, on cached gains.
  const auto sample_rate = [&](int u, double fade) {
    const int s = us[static_cast<size_t>(u)].serving;
    const double signal = gain[static_cast<size_t>(u) * m + s] * fade;
    double interference = 0.0;
    if (full_reuse) {
      for (int b = 0; b < m; ++b) {
        if (b == s || !active[static_cast<size_t>(b)]) continue;
        interference += gain[static_cast<size_t>(u) * m + b];
      }
    }
    const double sinr = clip_sinr(signal / (noise_w + interference), ch.sinr_clip_db);
    return achievable_rate_bps(sinr, ch.bandwidth_hz);
  };

  for (int u = 0; u < n; ++u) {
    const UserInit* ov = static_cast<size_t>(u) < cfg.user_overrides.size()
                             ? &cfg.user_overrides[static_cast<size_t>(u)]
                             : nullptr;
    RngStream place(stream_seed(cfg.seed, RngPurpose::Placement, static_cast<std::uint64_t>(u)));
    wp_rng.emplace_back(stream_seed(cfg.seed, RngPurpose::Waypoint, static_cast<std::uint64_t>(u)));
    shadow_rng.emplace_back(stream_seed(cfg.seed, RngPurpose::Shadowing, static_cast<std::uint64_t>(u)));
    fade_rng.emplace_back(stream_seed(cfg.seed, RngPurpose::Fading, static_cast<std::uint64_t>(u)));

    UserState& st = us[static_cast<size_t>(u)];
    Position pos = sample_waypoint(net, place);
    if (ov && ov->x) pos = {*ov->x, *ov->y};
    Position wp = sample_waypoint(net, wp_rng[static_cast<size_t>(u)]);
    if (ov && ov->waypoint_x) wp = {*ov->waypoint_x, *ov->waypoint_y};
    st.mob = MobilityState{pos, wp, ov && ov->speed_mps ? *ov->speed_mps : cfg.speed_mps};
    digest = fold(digest, pos.x);
    digest = fold(digest, pos.y);
    redraw_shadow(u);
    recompute_gains(u);
    st.serving = best_server(pos, net.cell_centers,
                             {&shadow[static_cast<size_t>(u) * m], static_cast<size_t>(m)}, -1);
    digest = fold_u(digest, static_cast<std::uint64_t>(st.serving));
    st.queue.mode = cfg.traffic.mode;
    st.queue.arrival_rate_bps = cfg.traffic.arrival_rate_bps;
    st.buf.stream_rate_bps = cfg.traffic.stream_rate_bps;
    st.buf.threshold_s = cfg.traffic.threshold_s;
    if (ov) st.life = FreezeStats{ov->prior_frozen_s, ov->prior_session_s};
    st.qos.freeze = freeze_fraction(st.life);
  }

  // Initial sample: seeds both averages and the first TTI's CQI.
  log.init_short_avg_bps.resize(static_cast<size_t>(n));
  log.init_long_avg_bps.resize(static_cast<size_t>(n));
  for (int u = 0; u < n; ++u) {
    const double fade = sample_fading_gain(fade_rng[static_cast<size_t>(u)]);
    digest = fold(digest, fade);
    const double r = sample_rate(u, fade);
    UserState& st = us[static_cast<size_t>(u)];
    st.cqi_bps = r;
    const double seeded = std::max(r, floor_bps);
    st.qos.short_avg_bps = seeded;
    st.qos.long_avg_bps = seeded;
    log.init_short_avg_bps[static_cast<size_t>(u)] = seeded;
    log.init_long_avg_bps[static_cast<size_t>(u)] = seeded;
  }

  std::vector<std::vector<int>> cell_users(static_cast<size_t>(m));
  std::vector<Observables> obs;
  obs.reserve(static_cast<size_t>(n));
  CellScheduler sched(cfg.sched);
  std::vector<char> scheduled(static_cast<size_t>(n));
  std::vector<double> served_bits(static_cast<size_t>(n));
  std::vector<double> bin_bits(static_cast<size_t>(n), 0.0);
  std::vector<char> bin_frozen(static_cast<size_t>(n), 0);

  for (long long t = 0; t < total_ttis; ++t) {
    const bool measuring = t >= warm_tti;

    // Environment epoch: mobility, shadowing decorrelation, association.
    if (t > 0 && t % mob_period == 0) {
      const double now = static_cast<double>(t) * tti;
      for (int u = 0; u < n; ++u) {
        UserState& st = us[static_cast<size_t>(u)];
        st.mob = advance_mobility(st.mob, mob_dt, net, wp_rng[static_cast<size_t>(u)]);
        digest = fold(digest, st.mob.position.x);
        digest = fold(digest, st.mob.position.y);
        if (distance(st.mob.position, st.last_shadow_pos) >= ch.shadow_redraw_m)
          redraw_shadow(u);
        recompute_gains(u);
        const int nb = best_server(
            st.mob.position, net.cell_centers,
            {&shadow[static_cast<size_t>(u) * m], static_cast<size_t>(m)}, st.serving);
        if (cbr) st.qos.freeze = freeze_fraction(st.life);
        if (auto rec = maybe_handover(u, st.serving, nb, cfg.handover, st.qos, now)) {
          log.handovers.push_back(*rec);
          if (measuring) ++st.handovers_in_window;
          digest = fold_u(digest, (static_cast<std::uint64_t>(u) << 32) ^
                                      static_cast<std::uint32_t>(nb));
        }
      }
    }

    if (cbr) {
      for (int u = 0; u < n; ++u) {
        UserState& st = us[static_cast<size_t>(u)];
        enqueue_arrivals(st.queue, tti);
        st.arrived_bits += cfg.traffic.arrival_rate_bps * tti;
      }
    }

    for (auto& v : cell_users) v.clear();
    for (int u = 0; u < n; ++u) {
      const UserState& st = us[static_cast<size_t>(u)];
      if (!cbr || st.queue.backlog_bits > 0.0)
        cell_users[static_cast<size_t>(st.serving)].push_back(u);
    }
    for (int b = 0; b < m; ++b)
      active[static_cast<size_t>(b)] = cell_users[static_cast<size_t>(b)].empty() ? 0 : 1;

    std::fill(scheduled.begin(), scheduled.end(), 0);
    if (cbr) std::fill(served_bits.begin(), served_bits.end(), 0.0);

    for (int b = 0; b < m; ++b) {
      auto& ulist = cell_users[static_cast<size_t>(b)];
      if (ulist.empty()) continue;
      obs.clear();
      for (int uid : ulist) {
        UserState& st = us[static_cast<size_t>(uid)];
        double fr = 0.0;
        if (cbr) {
          fr = freeze_fraction(st.life);
          st.qos.freeze = fr;
        }
        obs.push_back(Observables{st.cqi_bps, st.qos.short_avg_bps,
                                  st.qos.long_avg_bps, 1.0, st.queue.backlog_bits, fr});
      }
      const int pick = sched.pick(obs);
      const int uid = ulist[static_cast<size_t>(pick)];
      scheduled[static_cast<size_t>(uid)] = 1;
      UserState& st = us[static_cast<size_t>(uid)];
      const double served = serve(st.queue, st.cqi_bps * tti);
      st.delivered_bits += served;
      if (cbr) served_bits[static_cast<size_t>(uid)] = served;
      if (measuring) {
        bin_bits[static_cast<size_t>(uid)] += served;
        log.traces[static_cast<size_t>(uid)].total_bits += served;
      }
    }

    if (cbr) {
      for (int u = 0; u < n; ++u) {
        UserState& st = us[static_cast<size_t>(u)];
        const FreezeStats before = st.life;
        playback_step(st.buf, served_bits[static_cast<size_t>(u)], tti, st.life);
        if (measuring) {
          const double d_frozen = st.life.frozen_s - before.frozen_s;
          st.win.frozen_s += d_frozen;
          st.win.session_s += st.life.session_s - before.session_s;
          if (d_frozen > 0.0) bin_frozen[static_cast<size_t>(u)] = 1;
        }
      }
    }

    // Averages update for every attached user, served or not. A pending
    // re-init (fresh handover) skips the decay: that average restarts from
    // the first rate measured in the new cell, in the sampling step below.
    for (int u = 0; u < n; ++u) {
      UserState& st = us[static_cast<size_t>(u)];
      const int p = scheduled[static_cast<size_t>(u)];
      if (!st.qos.reinit_short)
        st.qos.short_avg_bps = std::max(
            update_moving_average(st.qos.short_avg_bps, st.cqi_bps, p, w_short_slots),
            floor_bps);
      if (!st.qos.reinit_long)
        st.qos.long_avg_bps = std::max(
            update_moving_average(st.qos.long_avg_bps, st.cqi_bps, p, w_long_slots),
            floor_bps);
    }

    // Sample the rate the scheduler will see next TTI, against this TTI's
    // set of transmitting cells. The fading stream advances for every user
    // every TTI no matter what, keeping compared runs on common randomness.
    for (int u = 0; u < n; ++u) {
      UserState& st = us[static_cast<size_t>(u)];
      const double fade = sample_fading_gain(fade_rng[static_cast<size_t>(u)]);
      digest = fold(digest, fade);
      const double r = sample_rate(u, fade);
      if (st.qos.reinit_short) {
        st.qos.short_avg_bps = std::max(r, floor_bps);
        st.qos.reinit_short = false;
      }
      if (st.qos.reinit_long) {
        st.qos.long_avg_bps = std::max(r, floor_bps);
        st.qos.reinit_long = false;
      }
      if (trace_slot[static_cast<size_t>(u)] >= 0) {
        log.tti_trace[static_cast<size_t>(trace_slot[static_cast<size_t>(u)])].push_back(
            TtiRow{st.cqi_bps, r, scheduled[static_cast<size_t>(u)], st.serving,
                   st.qos.short_avg_bps, st.qos.long_avg_bps, st.queue.backlog_bits});
      }
      st.cqi_bps = r;
    }

    if (measuring && (t - warm_tti + 1) % ttis_per_s == 0) {
      for (int u = 0; u < n; ++u) {
        log.traces[static_cast<size_t>(u)].bins.push_back(
            BinRow{bin_bits[static_cast<size_t>(u)], us[static_cast<size_t>(u)].serving,
                   bin_frozen[static_cast<size_t>(u)] != 0});
        bin_bits[static_cast<size_t>(u)] = 0.0;
        bin_frozen[static_cast<size_t>(u)] = 0;
      }
    }
  }

  for (int u = 0; u < n; ++u) {
    const UserState& st = us[static_cast<size_t>(u)];
    UserTrace& tr = log.traces[static_cast<size_t>(u)];
    tr.measured_s = log.measured_s;
    tr.frozen_s = st.win.frozen_s;
    tr.session_s = st.win.session_s;
    tr.handovers = st.handovers_in_window;
    log.arrived_bits.push_back(st.arrived_bits);
    log.delivered_bits.push_back(st.delivered_bits);
    log.queue_bits.push_back(st.queue.backlog_bits);
    log.consumed_s.push_back(st.buf.consumed_s);
    log.buffer_s.push_back(st.buf.content_s);
  }
  log.report = build_report(log.traces, floor_bps);
  log.env_digest = digest;
  return log;
}

}  // namespace lls
