#include "lls/traffic.hpp"

#include <algorithm>

namespace lls {

void enqueue_arrivals(BsQueue& q, double dt) {
  if (q.mode == TrafficMode::Cbr) q.backlog_bits += q.arrival_rate_bps * dt;
}

double serve(BsQueue& q, double offered_bits) {
  if (q.mode == TrafficMode::FullBuffer) return offered_bits;
  const double served = std::min(offered_bits, q.backlog_bits);
  q.backlog_bits -= served;
  return served;
}

double freeze_fraction(const FreezeStats& s) {
  return s.session_s > 0.0 ? s.frozen_s / s.session_s : 0.0;
}

void playback_step(PlaybackBuffer& b, double delivered_bits, double dt,
                   FreezeStats& stats) {
  b.content_s += delivered_bits / b.stream_rate_bps;

  if (!b.started) {
    if (b.content_s >= b.threshold_s) {
      b.started = true;
      b.frozen = false;
    }
    return;  // startup buffering, not yet a session
  }

  if (!b.frozen) {
    const double after = b.content_s - dt;
    if (after <= 0.0) {
      b.consumed_s += b.content_s;  // only the remaining media played out
      b.content_s = 0.0;
      b.frozen = true;
    } else {
      b.consumed_s += dt;
      b.content_s = after;
    }
  }
  if (b.frozen) {
    stats.frozen_s += dt;
    if (b.content_s >= b.threshold_s) b.frozen = false;
  }
  stats.session_s += dt;
}

}  // namespace lls
