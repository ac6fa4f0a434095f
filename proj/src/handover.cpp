#include "lls/handover.hpp"

#include <cassert>

#include "lls/channel.hpp"

namespace lls {

int best_server(const Position& user, std::span<const Position> cells,
                std::span<const double> shadow_db, int current) {
  assert(!cells.empty() && cells.size() == shadow_db.size());
  int best = -1;
  double best_score = 0.0;
  for (size_t b = 0; b < cells.size(); ++b) {
    const double d_km = distance(user, cells[b]) / 1000.0;
    const double score = -path_loss_db(d_km) - shadow_db[b];
    if (best < 0 || score > best_score) {
      best = static_cast<int>(b);
      best_score = score;
    }
  }
  if (current >= 0 && current < static_cast<int>(cells.size())) {
    const double d_km = distance(user, cells[current]) / 1000.0;
    if (-path_loss_db(d_km) - shadow_db[current] == best_score) return current;
  }
  return best;
}

std::optional<HandoverRecord> maybe_handover(int user, int& serving, int new_best,
                                             HandoverMode mode, UserQos& qos,
                                             double now_s) {
  if (new_best == serving) return std::nullopt;
  HandoverRecord rec{user, serving, new_best, qos.long_avg_bps, qos.freeze, now_s};
  serving = new_best;
  qos.reinit_short = true;
  if (mode == HandoverMode::SingleCell) qos.reinit_long = true;
  return rec;
}

}  // namespace lls
