#include "lls/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace lls {

namespace {

double cross(const Position& o, const Position& a, const Position& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Hexagonal cells tile with centers D apart, so the cell circumradius is
// D/sqrt(3) and the vertices sit halfway between neighbor directions.
std::vector<Position> hex_cell_corners(const Position& c, double d) {
  const double r = d / std::sqrt(3.0);
  std::vector<Position> out;
  out.reserve(6);
  for (int k = 0; k < 6; ++k) {
    const double ang = (30.0 + 60.0 * k) * M_PI / 180.0;
    out.push_back({c.x + r * std::cos(ang), c.y + r * std::sin(ang)});
  }
  return out;
}

ConvexRegion region_of_cells(const std::vector<Position>& centers, double d) {
  std::vector<Position> pts;
  pts.reserve(centers.size() * 6);
  for (const auto& c : centers) {
    for (const auto& v : hex_cell_corners(c, d)) pts.push_back(v);
  }
  return convex_hull(std::move(pts));
}

}  // namespace

bool ConvexRegion::contains(const Position& p) const {
  if (p.x < min_x || p.x > max_x || p.y < min_y || p.y > max_y) return false;
  const double scale = std::max(max_x - min_x, max_y - min_y);
  const double eps = 1e-9 * scale * scale;
  const size_t n = hull.size();
  for (size_t i = 0; i < n; ++i) {
    if (cross(hull[i], hull[(i + 1) % n], p) < -eps) return false;
  }
  return true;
}

double ConvexRegion::area() const {
  double a = 0;
  const size_t n = hull.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& p = hull[i];
    const auto& q = hull[(i + 1) % n];
    a += p.x * q.y - q.x * p.y;
  }
  return 0.5 * a;
}

Position ConvexRegion::centroid() const {
  double a = 0, cx = 0, cy = 0;
  const size_t n = hull.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& p = hull[i];
    const auto& q = hull[(i + 1) % n];
    const double w = p.x * q.y - q.x * p.y;
    a += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  a *= 0.5;
  return {cx / (6.0 * a), cy / (6.0 * a)};
}

ConvexRegion convex_hull(std::vector<Position> pts) {
  if (pts.size() < 3) throw std::invalid_argument("convex_hull: need >= 3 points");
  std::sort(pts.begin(), pts.end(), [](const Position& a, const Position& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Position& a, const Position& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());
  const size_t n = pts.size();
  std::vector<Position> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);

  ConvexRegion r;
  r.hull = std::move(h);
  r.min_x = r.max_x = r.hull[0].x;
  r.min_y = r.max_y = r.hull[0].y;
  for (const auto& p : r.hull) {
    r.min_x = std::min(r.min_x, p.x);
    r.max_x = std::max(r.max_x, p.x);
    r.min_y = std::min(r.min_y, p.y);
    r.max_y = std::max(r.max_y, p.y);
  }
  return r;
}

HexNetwork build_hex_layout(int rings, double inter_bs_distance) {
  if (rings < 0 || inter_bs_distance <= 0) {
    throw std::invalid_argument("build_hex_layout: rings >= 0 and D > 0 required");
  }
  const double d = inter_bs_distance;
  // Triangular lattice via axial coordinates: (q, r) -> D*(q + r/2, sqrt(3)/2 r).
  auto at = [d](int q, int r) -> Position {
    return {d * (q + 0.5 * r), d * (std::sqrt(3.0) / 2.0) * r};
  };
  std::vector<Position> centers;
  centers.push_back(at(0, 0));
  static constexpr int dirs[6][2] = {{1, 0},  {0, 1},  {-1, 1},
                                     {-1, 0}, {0, -1}, {1, -1}};
  for (int ring = 1; ring <= rings; ++ring) {
    int q = dirs[4][0] * ring;  // start at the "ring * south-west" corner
    int r = dirs[4][1] * ring;
    for (int side = 0; side < 6; ++side) {
      for (int step = 0; step < ring; ++step) {
        centers.push_back(at(q, r));
        q += dirs[side][0];
        r += dirs[side][1];
      }
    }
  }

  HexNetwork net;
  net.inter_bs_distance = d;
  net.region = region_of_cells(centers, d);
  net.cell_centers = std::move(centers);
  return net;
}

HexNetwork build_line_layout(int cells, double inter_bs_distance) {
  if (cells < 1 || inter_bs_distance <= 0) {
    throw std::invalid_argument("build_line_layout: cells >= 1 and D > 0 required");
  }
  std::vector<Position> centers;
  centers.reserve(cells);
  for (int i = 0; i < cells; ++i) centers.push_back({i * inter_bs_distance, 0.0});
  HexNetwork net;
  net.inter_bs_distance = inter_bs_distance;
  net.region = region_of_cells(centers, inter_bs_distance);
  net.cell_centers = std::move(centers);
  return net;
}

Position sample_waypoint(const HexNetwork& net, RngStream& rng) {
  const auto& r = net.region;
  for (;;) {
    Position p{rng.uniform(r.min_x, r.max_x), rng.uniform(r.min_y, r.max_y)};
    if (r.contains(p)) return p;
  }
}

MobilityState advance_mobility(MobilityState state, double dt,
                               const HexNetwork& net, RngStream& rng) {
  double remaining = state.speed * dt;
  while (remaining > 0) {
    const double leg = distance(state.position, state.waypoint);
    if (leg <= remaining) {
      state.position = state.waypoint;
      remaining -= leg;
      state.waypoint = sample_waypoint(net, rng);
    } else {
      const double f = remaining / leg;
      state.position.x += (state.waypoint.x - state.position.x) * f;
      state.position.y += (state.waypoint.y - state.position.y) * f;
      remaining = 0;
    }
  }
  return state;
}

}  // namespace lls
