#pragma once

namespace lls {

enum class TrafficMode { FullBuffer, Cbr };

struct BsQueue {
  double backlog_bits = 0.0;
  double arrival_rate_bps = 0.0;
  TrafficMode mode = TrafficMode::FullBuffer;
};

// CBR: backlog += lambda*dt. Full buffer is an infinite supply, no-op.
void enqueue_arrivals(BsQueue& q, double dt);

// Returns the bits actually taken from the queue: min(offered, backlog) in
// CBR mode, `offered` in full-buffer mode.
double serve(BsQueue& q, double offered_bits);

struct FreezeStats {
  double frozen_s = 0.0;
  double session_s = 0.0;
};

// frozen/session, 0 when there is no session yet.
double freeze_fraction(const FreezeStats& s);

// Client playback buffer. Content is measured in seconds of media; playback
// consumes wall time 1:1 while playing and stalls when the buffer empties,
// resuming once it is re-filled to the threshold. A session starts in startup
// buffering: nothing is counted toward the freeze statistics until the buffer
// first reaches the threshold.
struct PlaybackBuffer {
  double content_s = 0.0;
  double stream_rate_bps = 1.5e6;
  double threshold_s = 5.0;
  bool frozen = true;
  bool started = false;
  double consumed_s = 0.0;  // media actually played out
};

void playback_step(PlaybackBuffer& b, double delivered_bits, double dt,
                   FreezeStats& stats);

}  // namespace lls
