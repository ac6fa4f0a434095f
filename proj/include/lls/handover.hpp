#pragma once

#include <optional>
#include <span>

#include "lls/geometry.hpp"

namespace lls {

enum class HandoverMode {
  MultiCell,   // long-term QoS state travels with the user
  SingleCell,  // each cell restarts the long-term average from scratch
};

// Per-user QoS state touched by a handover. Averages that must restart are
// not zeroed here: they re-seed from the next measured rate (flag-driven),
// mirroring how they were initialized at attach time.
struct UserQos {
  double short_avg_bps = 0.0;
  double long_avg_bps = 0.0;
  double freeze = 0.0;  // lifetime frozen/session fraction at last update
  bool reinit_short = false;
  bool reinit_long = false;
};

struct HandoverRecord {
  int user = 0;
  int from = 0;
  int to = 0;
  double long_avg_bps = 0.0;  // value handed to the target cell
  double freeze = 0.0;
  double t_s = 0.0;
};

// Strongest mean received power: argmax over cells of -PL(d) - shadowing.
// Fast fading is excluded; equal tx power cancels out of the argmax.
// Exact ties keep `current` (pass -1 when unattached).
int best_server(const Position& user, std::span<const Position> cells,
                std::span<const double> shadow_db, int current);

// Moves the user to new_best if it differs from `serving`. The short average
// always restarts (it is cell-local); the long average and freeze fraction
// are carried in multi-cell mode, while single-cell mode restarts the long
// average too. Returns the record to log, or nullopt when nothing changed.
std::optional<HandoverRecord> maybe_handover(int user, int& serving, int new_best,
                                             HandoverMode mode, UserQos& qos,
                                             double now_s);

}  // namespace lls
