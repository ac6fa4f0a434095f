#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lls/channel.hpp"
#include "lls/handover.hpp"
#include "lls/scheduler.hpp"
#include "lls/traffic.hpp"

namespace lls {

inline constexpr const char* kVersionString = "0.1.0";

enum class LayoutKind { HexRings, Line };

struct LayoutConfig {
  LayoutKind kind = LayoutKind::HexRings;
  int rings = 2;  // 19 cells
  int cells = 3;  // Line layouts only
  double spacing_m = 1000.0;
};

struct TrafficConfig {
  TrafficMode mode = TrafficMode::FullBuffer;
  double arrival_rate_bps = 12e6;  // per user, from the core network
  double stream_rate_bps = 1.5e6;
  double threshold_s = 5.0;  // playback (re)start level
};

// Optional per-user scripting hooks for constructed scenarios: pin the start
// position / first waypoint / speed, or seed playback history so a user
// arrives with a non-trivial freeze record.
struct UserInit {
  std::optional<double> x, y;
  std::optional<double> waypoint_x, waypoint_y;
  std::optional<double> speed_mps;
  double prior_frozen_s = 0.0;
  double prior_session_s = 0.0;
};

struct ScenarioConfig {
  LayoutConfig layout;
  int users = 250;
  double speed_mps = 10.0;
  double sim_time_s = 500.0;
  double warm_up_s = 200.0;
  double tti_s = 0.001;
  std::uint64_t seed = 1;
  ChannelConfig channel;           // bandwidth_hz is resolved from the pair below
  double bw_full_buffer_hz = 10e6;
  double bw_cbr_hz = 5e6;
  TrafficConfig traffic;
  SchedulerParams sched;
  HandoverMode handover = HandoverMode::MultiCell;
  std::vector<UserInit> user_overrides;  // indexed by user id; may be shorter
};

// Defaults above are the full-scale setup; `desk` shrinks it for fast runs.
ScenarioConfig preset_full();
ScenarioConfig preset_desk();
ScenarioConfig preset(std::string_view name);  // throws on unknown name

// The bandwidth actually simulated, chosen by traffic mode.
double effective_bandwidth_hz(const ScenarioConfig& cfg);

// Apply one `key=value` override (dotted keys, see README). Throws
// std::invalid_argument on unknown keys or unparsable values.
void apply_kv(ScenarioConfig& cfg, std::string_view key, std::string_view value);

// `key = value` lines, `#` comments. Applied on top of cfg.
void load_config_file(ScenarioConfig& cfg, const std::string& path);

// Rejects contradictory setups before the engine starts.
void validate(const ScenarioConfig& cfg);

// Canonical ordered key/value listing; feeds the manifest and makes two runs
// comparable by string equality.
std::vector<std::pair<std::string, std::string>> echo_config(const ScenarioConfig& cfg);

// Sweep axis aliases (W, alpha, beta, c, N, lambda, rule, handover) resolved
// to config keys; full dotted keys pass through. Throws on unknown names.
std::string axis_key(std::string_view alias);

std::string format_double(double v);  // shortest round-trip-exact decimal

}  // namespace lls
