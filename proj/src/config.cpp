#include "lls/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string_view>

namespace lls {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view key, std::string_view what) {
  throw std::invalid_argument("config: " + std::string(key) + ": " + std::string(what));
}

double to_double(std::string_view key, std::string_view v) {
  try {
    size_t pos = 0;
    const double d = std::stod(std::string(v), &pos);
    if (pos != v.size()) bad(key, "trailing characters in number");
    return d;
  } catch (const std::invalid_argument&) {
    bad(key, "not a number");
  } catch (const std::out_of_range&) {
    bad(key, "number out of range");
  }
}

long long to_int(std::string_view key, std::string_view v) {
  long long out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) bad(key, "not an integer");
  return out;
}

bool to_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  bad(key, "not a boolean");
}

bool apply_user_kv(ScenarioConfig& cfg, std::string_view key, std::string_view v) {
  if (!key.starts_with("user.")) return false;
  std::string_view rest = key.substr(5);
  const size_t dot = rest.find('.');
  if (dot == std::string_view::npos) bad(key, "expected user.<index>.<field>");
  const long long idx = to_int(key, rest.substr(0, dot));
  if (idx < 0 || idx > 100000) bad(key, "user index out of range");
  std::string_view field = rest.substr(dot + 1);
  if (cfg.user_overrides.size() <= static_cast<size_t>(idx))
    cfg.user_overrides.resize(static_cast<size_t>(idx) + 1);
  UserInit& u = cfg.user_overrides[static_cast<size_t>(idx)];
  if (field == "x") u.x = to_double(key, v);
  else if (field == "y") u.y = to_double(key, v);
  else if (field == "waypoint_x") u.waypoint_x = to_double(key, v);
  else if (field == "waypoint_y") u.waypoint_y = to_double(key, v);
  else if (field == "speed_mps") u.speed_mps = to_double(key, v);
  else if (field == "prior_frozen_s") u.prior_frozen_s = to_double(key, v);
  else if (field == "prior_session_s") u.prior_session_s = to_double(key, v);
  else bad(key, "unknown user field");
  return true;
}

}  // namespace

ScenarioConfig preset_full() { return ScenarioConfig{}; }

ScenarioConfig preset_desk() {
  ScenarioConfig cfg;
  cfg.users = 60;
  cfg.speed_mps = 40.0 / 3.6;  // 40 km/h
  cfg.sim_time_s = 120.0;
  cfg.warm_up_s = 30.0;
  return cfg;
}

ScenarioConfig preset(std::string_view name) {
  if (name == "full") return preset_full();
  if (name == "desk") return preset_desk();
  throw std::invalid_argument("unknown preset: " + std::string(name));
}

double effective_bandwidth_hz(const ScenarioConfig& cfg) {
  return cfg.traffic.mode == TrafficMode::Cbr ? cfg.bw_cbr_hz : cfg.bw_full_buffer_hz;
}

void apply_kv(ScenarioConfig& cfg, std::string_view key_in, std::string_view val_in) {
  const std::string_view key = trim(key_in);
  const std::string_view v = trim(val_in);
  if (key.empty()) throw std::invalid_argument("config: empty key");
  if (v.empty()) bad(key, "empty value");

  if (apply_user_kv(cfg, key, v)) return;

  if (key == "layout.kind") {
    if (v == "hex") cfg.layout.kind = LayoutKind::HexRings;
    else if (v == "line") cfg.layout.kind = LayoutKind::Line;
    else bad(key, "expected hex|line");
  } else if (key == "layout.rings") {
    cfg.layout.rings = static_cast<int>(to_int(key, v));
  } else if (key == "layout.cells") {
    cfg.layout.cells = static_cast<int>(to_int(key, v));
  } else if (key == "layout.spacing_m") {
    cfg.layout.spacing_m = to_double(key, v);
  } else if (key == "sim.users") {
    cfg.users = static_cast<int>(to_int(key, v));
  } else if (key == "sim.speed_mps") {
    cfg.speed_mps = to_double(key, v);
  } else if (key == "sim.time_s") {
    cfg.sim_time_s = to_double(key, v);
  } else if (key == "sim.warm_up_s") {
    cfg.warm_up_s = to_double(key, v);
  } else if (key == "sim.tti_s") {
    cfg.tti_s = to_double(key, v);
  } else if (key == "sim.seed") {
    cfg.seed = static_cast<std::uint64_t>(to_int(key, v));
  } else if (key == "channel.carrier_hz") {
    cfg.channel.carrier_hz = to_double(key, v);
  } else if (key == "channel.bandwidth_hz") {
    cfg.bw_full_buffer_hz = cfg.bw_cbr_hz = to_double(key, v);
  } else if (key == "channel.bandwidth_full_hz") {
    cfg.bw_full_buffer_hz = to_double(key, v);
  } else if (key == "channel.bandwidth_cbr_hz") {
    cfg.bw_cbr_hz = to_double(key, v);
  } else if (key == "channel.tx_power_w") {
    cfg.channel.tx_power_w = to_double(key, v);
  } else if (key == "channel.noise_density_dbm_hz") {
    cfg.channel.noise_density_dbm_hz = to_double(key, v);
  } else if (key == "channel.noise_figure_db") {
    cfg.channel.noise_figure_db = to_double(key, v);
  } else if (key == "channel.shadowing_std_db") {
    cfg.channel.shadowing_std_db = to_double(key, v);
  } else if (key == "channel.shadow_redraw_m") {
    cfg.channel.shadow_redraw_m = to_double(key, v);
  } else if (key == "channel.sinr_clip_db") {
    cfg.channel.sinr_clip_db = to_double(key, v);
  } else if (key == "channel.interference") {
    if (v == "full-reuse") cfg.channel.interference = InterferenceMode::FullReuse;
    else if (v == "noise-limited") cfg.channel.interference = InterferenceMode::NoiseLimited;
    else bad(key, "expected full-reuse|noise-limited");
  } else if (key == "traffic.mode") {
    if (v == "full-buffer") cfg.traffic.mode = TrafficMode::FullBuffer;
    else if (v == "cbr") cfg.traffic.mode = TrafficMode::Cbr;
    else bad(key, "expected full-buffer|cbr");
  } else if (key == "traffic.arrival_rate_bps") {
    cfg.traffic.arrival_rate_bps = to_double(key, v);
  } else if (key == "traffic.stream_rate_bps") {
    cfg.traffic.stream_rate_bps = to_double(key, v);
  } else if (key == "traffic.threshold_s") {
    cfg.traffic.threshold_s = to_double(key, v);
  } else if (key == "scheduler.rule") {
    const auto r = parse_rule(v);
    if (!r) bad(key, "unknown rule");
    cfg.sched.rule = *r;
  } else if (key == "scheduler.w_short_s") {
    cfg.sched.w_short_s = to_double(key, v);
  } else if (key == "scheduler.w_long_s") {
    cfg.sched.w_long_s = to_double(key, v);
  } else if (key == "scheduler.alpha") {
    cfg.sched.alpha = to_double(key, v);
  } else if (key == "scheduler.beta") {
    cfg.sched.beta = to_double(key, v);
  } else if (key == "scheduler.steepness") {
    cfg.sched.steepness = to_double(key, v);
  } else if (key == "scheduler.queue_weight") {
    cfg.sched.queue_weight = to_double(key, v);
  } else if (key == "scheduler.queue_scale") {
    cfg.sched.queue_scale = to_double(key, v);
  } else if (key == "scheduler.rate_floor_bps") {
    cfg.sched.rate_floor_bps = to_double(key, v);
  } else if (key == "scheduler.freeze_floor") {
    cfg.sched.freeze_floor = to_double(key, v);
  } else if (key == "scheduler.sigmoid_mirrored") {
    cfg.sched.sigmoid_mirrored = to_bool(key, v);
  } else if (key == "handover.mode") {
    if (v == "multi-cell") cfg.handover = HandoverMode::MultiCell;
    else if (v == "single-cell") cfg.handover = HandoverMode::SingleCell;
    else bad(key, "expected multi-cell|single-cell");
  } else {
    bad(key, "unknown key");
  }
}

void load_config_file(ScenarioConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (const size_t hash = s.find('#'); hash != std::string_view::npos)
      s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const size_t eq = s.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key = value");
    apply_kv(cfg, s.substr(0, eq), s.substr(eq + 1));
  }
}

void validate(const ScenarioConfig& cfg) {
  const auto fail = [](std::string_view what) {
    throw std::invalid_argument("config: " + std::string(what));
  };
  if (cfg.layout.kind == LayoutKind::HexRings && cfg.layout.rings < 0)
    fail("layout.rings must be >= 0");
  if (cfg.layout.kind == LayoutKind::Line && cfg.layout.cells < 1)
    fail("layout.cells must be >= 1");
  if (cfg.layout.spacing_m <= 0) fail("layout.spacing_m must be > 0");
  if (cfg.users < 1) fail("sim.users must be >= 1");
  if (cfg.speed_mps < 0) fail("sim.speed_mps must be >= 0");
  if (cfg.tti_s <= 0) fail("sim.tti_s must be > 0");
  if (cfg.sim_time_s <= 0) fail("sim.time_s must be > 0");
  if (cfg.warm_up_s < 0 || cfg.warm_up_s >= cfg.sim_time_s)
    fail("sim.warm_up_s must lie in [0, sim.time_s)");
  if (cfg.bw_full_buffer_hz <= 0 || cfg.bw_cbr_hz <= 0)
    fail("channel bandwidth must be > 0");
  if (cfg.channel.tx_power_w <= 0) fail("channel.tx_power_w must be > 0");
  if (cfg.channel.shadowing_std_db < 0) fail("channel.shadowing_std_db must be >= 0");
  if (cfg.channel.shadow_redraw_m <= 0) fail("channel.shadow_redraw_m must be > 0");
  if (cfg.traffic.mode == TrafficMode::Cbr) {
    if (cfg.traffic.arrival_rate_bps <= 0) fail("traffic.arrival_rate_bps must be > 0");
    if (cfg.traffic.stream_rate_bps <= 0) fail("traffic.stream_rate_bps must be > 0");
    if (cfg.traffic.threshold_s <= 0) fail("traffic.threshold_s must be > 0");
  }
  if (cfg.sched.w_short_s <= 0 || cfg.sched.w_long_s <= 0)
    fail("scheduler windows must be > 0");
  if (cfg.sched.w_short_s / cfg.tti_s < 1.0 || cfg.sched.w_long_s / cfg.tti_s < 1.0)
    fail("scheduler windows must cover at least one slot");
  if (cfg.sched.beta <= 0 || cfg.sched.beta >= 1) fail("scheduler.beta must be in (0,1)");
  if (cfg.sched.steepness <= 0) fail("scheduler.steepness must be > 0");
  if (cfg.sched.rate_floor_bps <= 0) fail("scheduler.rate_floor_bps must be > 0");
  if (cfg.sched.freeze_floor <= 0) fail("scheduler.freeze_floor must be > 0");
  if (cfg.sched.queue_scale <= 0) fail("scheduler.queue_scale must be > 0");
  if (cfg.sched.rule == Rule::LlExpFreeze && cfg.traffic.mode != TrafficMode::Cbr)
    fail("ll-exp-freeze needs streaming traffic (traffic.mode=cbr)");
  if (cfg.user_overrides.size() > static_cast<size_t>(cfg.users))
    fail("user overrides index beyond sim.users");
  for (const auto& u : cfg.user_overrides) {
    if (u.prior_frozen_s < 0 || u.prior_session_s < 0 ||
        u.prior_frozen_s > u.prior_session_s)
      fail("user prior freeze history must satisfy 0 <= frozen <= session");
    if (u.x.has_value() != u.y.has_value()) fail("user position needs both x and y");
    if (u.waypoint_x.has_value() != u.waypoint_y.has_value())
      fail("user waypoint needs both waypoint_x and waypoint_y");
  }
}

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, p);
}

std::vector<std::pair<std::string, std::string>> echo_config(const ScenarioConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> kv;
  const auto add = [&kv](std::string key, std::string val) {
    kv.emplace_back(std::move(key), std::move(val));
  };
  const auto addd = [&](std::string key, double v) { add(std::move(key), format_double(v)); };

  add("layout.kind", cfg.layout.kind == LayoutKind::HexRings ? "hex" : "line");
  if (cfg.layout.kind == LayoutKind::HexRings)
    add("layout.rings", std::to_string(cfg.layout.rings));
  else
    add("layout.cells", std::to_string(cfg.layout.cells));
  addd("layout.spacing_m", cfg.layout.spacing_m);
  add("sim.users", std::to_string(cfg.users));
  addd("sim.speed_mps", cfg.speed_mps);
  addd("sim.time_s", cfg.sim_time_s);
  addd("sim.warm_up_s", cfg.warm_up_s);
  addd("sim.tti_s", cfg.tti_s);
  add("sim.seed", std::to_string(cfg.seed));
  addd("channel.carrier_hz", cfg.channel.carrier_hz);
  addd("channel.bandwidth_full_hz", cfg.bw_full_buffer_hz);
  addd("channel.bandwidth_cbr_hz", cfg.bw_cbr_hz);
  addd("channel.tx_power_w", cfg.channel.tx_power_w);
  addd("channel.noise_density_dbm_hz", cfg.channel.noise_density_dbm_hz);
  addd("channel.noise_figure_db", cfg.channel.noise_figure_db);
  addd("channel.shadowing_std_db", cfg.channel.shadowing_std_db);
  addd("channel.shadow_redraw_m", cfg.channel.shadow_redraw_m);
  addd("channel.sinr_clip_db", cfg.channel.sinr_clip_db);
  add("channel.interference", cfg.channel.interference == InterferenceMode::FullReuse
                                  ? "full-reuse"
                                  : "noise-limited");
  add("traffic.mode", cfg.traffic.mode == TrafficMode::Cbr ? "cbr" : "full-buffer");
  if (cfg.traffic.mode == TrafficMode::Cbr) {
    addd("traffic.arrival_rate_bps", cfg.traffic.arrival_rate_bps);
    addd("traffic.stream_rate_bps", cfg.traffic.stream_rate_bps);
    addd("traffic.threshold_s", cfg.traffic.threshold_s);
  }
  add("scheduler.rule", rule_name(cfg.sched.rule));
  addd("scheduler.w_short_s", cfg.sched.w_short_s);
  addd("scheduler.w_long_s", cfg.sched.w_long_s);
  addd("scheduler.alpha", cfg.sched.alpha);
  addd("scheduler.beta", cfg.sched.beta);
  addd("scheduler.steepness", cfg.sched.steepness);
  addd("scheduler.queue_weight", cfg.sched.queue_weight);
  addd("scheduler.queue_scale", cfg.sched.queue_scale);
  addd("scheduler.rate_floor_bps", cfg.sched.rate_floor_bps);
  addd("scheduler.freeze_floor", cfg.sched.freeze_floor);
  add("scheduler.sigmoid_mirrored", cfg.sched.sigmoid_mirrored ? "true" : "false");
  add("handover.mode",
      cfg.handover == HandoverMode::MultiCell ? "multi-cell" : "single-cell");
  for (size_t i = 0; i < cfg.user_overrides.size(); ++i) {
    const UserInit& u = cfg.user_overrides[i];
    const std::string p = "user." + std::to_string(i) + ".";
    if (u.x) addd(p + "x", *u.x);
    if (u.y) addd(p + "y", *u.y);
    if (u.waypoint_x) addd(p + "waypoint_x", *u.waypoint_x);
    if (u.waypoint_y) addd(p + "waypoint_y", *u.waypoint_y);
    if (u.speed_mps) addd(p + "speed_mps", *u.speed_mps);
    if (u.prior_session_s > 0) {
      addd(p + "prior_frozen_s", u.prior_frozen_s);
      addd(p + "prior_session_s", u.prior_session_s);
    }
  }
  return kv;
}

std::string axis_key(std::string_view alias) {
  if (alias == "W") return "scheduler.w_long_s";
  if (alias == "alpha") return "scheduler.alpha";
  if (alias == "beta") return "scheduler.beta";
  if (alias == "c") return "scheduler.steepness";
  if (alias == "N") return "sim.users";
  if (alias == "lambda") return "traffic.arrival_rate_bps";
  if (alias == "rule") return "scheduler.rule";
  if (alias == "handover") return "handover.mode";
  if (alias.find('.') != std::string_view::npos) return std::string(alias);
  throw std::invalid_argument("unknown sweep axis: " + std::string(alias));
}

}  // namespace lls
