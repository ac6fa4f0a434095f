#pragma once

#include <cmath>
#include <vector>

#include "lls/rng.hpp"

namespace lls {

struct Position {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Position& a, const Position& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

// Convex polygon, vertices stored counter-clockwise.
struct ConvexRegion {
  std::vector<Position> hull;
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;

  bool contains(const Position& p) const;
  Position centroid() const;
  double area() const;
};

ConvexRegion convex_hull(std::vector<Position> points);

struct HexNetwork {
  std::vector<Position> cell_centers;
  double inter_bs_distance = 0.0;
  ConvexRegion region;  // convex hull of the hexagonal cell union
};

// Center cell at the origin plus `rings` concentric rings on a triangular
// lattice with spacing D; 1 + 3r(r+1) cells total.
HexNetwork build_hex_layout(int rings, double inter_bs_distance);

// Cells in a row along the x axis. Used by scripted scenarios.
HexNetwork build_line_layout(int cells, double inter_bs_distance);

// Uniform over the region, by rejection from the bounding box.
Position sample_waypoint(const HexNetwork& net, RngStream& rng);

struct MobilityState {
  Position position;
  Position waypoint;
  double speed = 0.0;  // m/s, constant for the whole run
};

// Straight-line motion toward the waypoint at S*dt per step. Arrival draws a
// new waypoint immediately (zero pause) and the leftover distance is carried
// into the next leg. The position never leaves the region: there is no
// wrap-around, which is what concentrates traffic toward the network center.
MobilityState advance_mobility(MobilityState state, double dt,
                               const HexNetwork& net, RngStream& rng);

}  // namespace lls
