#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace lls {

// Every stochastic input draws from its own sub-stream keyed by
// (master seed, purpose, user). Scheduler rule, traffic parameters and
// handover mode never touch these streams, so compared runs see identical
// environment randomness (common random numbers).
enum class RngPurpose : std::uint64_t {
  Placement = 1,
  Waypoint = 2,
  Shadowing = 3,
  Fading = 4,
};

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t master, RngPurpose purpose,
                                 std::uint64_t user, std::uint64_t salt = 0) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ static_cast<std::uint64_t>(purpose));
  h = mix64(h ^ (user + 1));
  h = mix64(h ^ salt);
  return h;
}

// mt19937_64 plus fixed transforms, so a (seed, purpose, user) triple yields
// the same draw sequence on every platform.
class RngStream {
 public:
  RngStream() : eng_(0) {}
  explicit RngStream(std::uint64_t seed) : eng_(seed) {}

  // [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // (0, 1], safe as a log argument
  double uniform_pos() {
    return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
  }

  double normal(double mean, double stddev) {
    // Box-Muller, one value per call
    constexpr double kTwoPi = 6.283185307179586;
    const double u1 = uniform_pos();
    const double u2 = uniform();
    return mean + stddev * std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  double exponential(double mean) { return -mean * std::log(uniform_pos()); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace lls
