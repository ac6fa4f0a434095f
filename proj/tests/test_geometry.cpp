#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "lls/geometry.hpp"
#include "lls/rng.hpp"

using namespace lls;

namespace {

double nearest_neighbor(const HexNetwork& net, size_t i) {
  double best = 1e300;
  for (size_t j = 0; j < net.cell_centers.size(); ++j) {
    if (j == i) continue;
    best = std::min(best, distance(net.cell_centers[i], net.cell_centers[j]));
  }
  return best;
}

}  // namespace

TEST_CASE("hex layout: cell counts follow 1 + 3r(r+1)") {
  for (int rings : {0, 1, 2, 3, 4}) {
    const auto net = build_hex_layout(rings, 1000.0);
    CHECK(net.cell_centers.size() ==
          static_cast<size_t>(1 + 3 * rings * (rings + 1)));
  }
}

TEST_CASE("hex layout: two rings give 19 cells at 1000 m spacing") {
  const auto net = build_hex_layout(2, 1000.0);
  REQUIRE(net.cell_centers.size() == 19);
  CHECK(net.cell_centers[0].x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(net.cell_centers[0].y == doctest::Approx(0.0).epsilon(1e-12));
  for (size_t i = 0; i < net.cell_centers.size(); ++i) {
    CHECK(nearest_neighbor(net, i) == doctest::Approx(1000.0).epsilon(1e-9));
  }
  for (const auto& c : net.cell_centers) CHECK(net.region.contains(c));
}

TEST_CASE("hex layout: single ring puts 6 cells at distance D") {
  const auto net = build_hex_layout(1, 500.0);
  REQUIRE(net.cell_centers.size() == 7);
  int at_d = 0;
  for (size_t i = 1; i < net.cell_centers.size(); ++i) {
    if (std::abs(distance(net.cell_centers[i], net.cell_centers[0]) - 500.0) < 1e-6)
      ++at_d;
  }
  CHECK(at_d == 6);
}

TEST_CASE("hex layout: zero rings is a single cell at the origin") {
  const auto net = build_hex_layout(0, 1000.0);
  REQUIRE(net.cell_centers.size() == 1);
  CHECK(net.cell_centers[0].x == 0.0);
  CHECK(net.cell_centers[0].y == 0.0);
  CHECK(net.region.area() > 0.0);
}

TEST_CASE("line layout: centers sit on the x axis, D apart") {
  const auto net = build_line_layout(3, 800.0);
  REQUIRE(net.cell_centers.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(net.cell_centers[i].x == doctest::Approx(800.0 * i));
    CHECK(net.cell_centers[i].y == 0.0);
    CHECK(net.region.contains(net.cell_centers[i]));
  }
}

TEST_CASE("distance: basics") {
  CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0));
  CHECK(distance({2, 7}, {2, 7}) == 0.0);
  CHECK(distance({1, 2}, {-4, 9}) == doctest::Approx(distance({-4, 9}, {1, 2})));
}

TEST_CASE("waypoints: always inside the region, deterministic per seed") {
  const auto net = build_hex_layout(2, 1000.0);
  RngStream a(42), b(42), c(43);
  bool all_inside = true;
  bool streams_match = true;
  bool seeds_differ = false;
  for (int i = 0; i < 20000; ++i) {
    const Position p = sample_waypoint(net, a);
    const Position q = sample_waypoint(net, b);
    const Position r = sample_waypoint(net, c);
    all_inside = all_inside && net.region.contains(p);
    streams_match = streams_match && p.x == q.x && p.y == q.y;
    seeds_differ = seeds_differ || p.x != r.x;
  }
  CHECK(all_inside);
  CHECK(streams_match);
  CHECK(seeds_differ);
}

TEST_CASE("waypoints: empirical mean matches the region centroid") {
  const auto net = build_hex_layout(2, 1000.0);
  const Position c = net.region.centroid();
  RngStream rng(7);
  double sx = 0, sy = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const Position p = sample_waypoint(net, rng);
    sx += p.x;
    sy += p.y;
  }
  // scale for "within 1%": the region's circumradius
  double radius = 0;
  for (const auto& v : net.region.hull)
    radius = std::max(radius, distance(v, c));
  CHECK(std::abs(sx / n - c.x) < 0.01 * radius);
  CHECK(std::abs(sy / n - c.y) < 0.01 * radius);
}

TEST_CASE("mobility: straight-line kinematics") {
  const auto net = build_hex_layout(2, 1000.0);
  RngStream rng(1);
  MobilityState st{{0, 0}, {100, 0}, 10.0};
  st = advance_mobility(st, 1.0, net, rng);
  CHECK(st.position.x == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(st.position.y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(st.waypoint.x == 100.0);  // not reached, unchanged
}

TEST_CASE("mobility: zero pause at the waypoint, motion continues same tick") {
  const auto net = build_hex_layout(2, 1000.0);
  RngStream rng(5);
  MobilityState st{{250, 250}, {250, 250}, 10.0};
  st = advance_mobility(st, 1.0, net, rng);
  const double moved = distance(st.position, {250, 250});
  CHECK(moved == doctest::Approx(10.0).epsilon(1e-9));  // full leg used
  CHECK((st.waypoint.x != 250.0 || st.waypoint.y != 250.0));
}

TEST_CASE("mobility: containment and per-step path length over a long run") {
  const auto net = build_hex_layout(2, 1000.0);
  RngStream rng(11);
  RngStream place(12);
  MobilityState st{sample_waypoint(net, place), sample_waypoint(net, place), 11.11};
  const double dt = 0.1;
  bool contained = true;
  int exact_steps = 0, split_steps = 0;
  for (int i = 0; i < 200000; ++i) {
    const Position before = st.position;
    const Position wp_before = st.waypoint;
    st = advance_mobility(st, dt, net, rng);
    contained = contained && net.region.contains(st.position);
    const double stepped = distance(before, st.position);
    const bool wp_changed =
        st.waypoint.x != wp_before.x || st.waypoint.y != wp_before.y;
    if (!wp_changed) {
      CHECK(stepped == doctest::Approx(st.speed * dt).epsilon(1e-9));
      ++exact_steps;
    } else {
      // displacement can only shrink when the path bends at the waypoint
      CHECK(stepped <= st.speed * dt * (1 + 1e-9));
      if (distance(wp_before, st.waypoint) > st.speed * dt) {
        // exactly one bend: the two segments add up to the full step
        const double path =
            distance(before, wp_before) + distance(wp_before, st.position);
        CHECK(path == doctest::Approx(st.speed * dt).epsilon(1e-9));
      }
      ++split_steps;
    }
  }
  CHECK(contained);
  CHECK(exact_steps > 0);
  CHECK(split_steps > 0);
}

TEST_CASE("mobility: stationary user never moves or draws waypoints") {
  const auto net = build_hex_layout(2, 1000.0);
  RngStream rng(3);
  MobilityState st{{100, 100}, {900, 900}, 0.0};
  for (int i = 0; i < 100; ++i) st = advance_mobility(st, 0.1, net, rng);
  CHECK(st.position.x == 100.0);
  CHECK(st.position.y == 100.0);
  RngStream untouched(3);
  CHECK(rng.uniform() == untouched.uniform());  // no draws consumed
}

TEST_CASE("mobility: long-run occupancy concentrates toward the center") {
  const auto net = build_hex_layout(2, 1000.0);
  const Position c = net.region.centroid();
  double radius = 0;
  for (const auto& v : net.region.hull)
    radius = std::max(radius, distance(v, c));

  RngStream rng(17);
  RngStream place(18);
  MobilityState st{sample_waypoint(net, place), sample_waypoint(net, place), 11.11};
  long long inner = 0, steps = 0;
  for (int i = 0; i < 400000; ++i) {
    st = advance_mobility(st, 0.1, net, rng);
    ++steps;
    if (distance(st.position, c) < 0.5 * radius) ++inner;
  }
  // uniform occupancy would put ~25% of time within half the radius; the
  // waypoint chaining pulls trajectories through the middle, so much more
  const double frac = static_cast<double>(inner) / static_cast<double>(steps);
  CHECK(frac > 0.30);
}
