#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "skyplace/rng.hpp"

namespace skyplace {

struct Position3D {
  double x = 0.0;  // m
  double y = 0.0;  // m
  double h = 0.0;  // altitude, m

  friend bool operator==(const Position3D&, const Position3D&) = default;
};

// Regular hexagon, flat-top orientation (two horizontal edges, vertices on
// the x axis at cx +/- radius). radius is the center-to-vertex distance.
struct HexRegion {
  double cx = 0.0;
  double cy = 0.0;
  double radius = 0.0;

  bool contains(double x, double y) const;
  bool contains(const Position3D& p) const { return contains(p.x, p.y); }

  // Distance from the center to the boundary along direction (ux, uy).
  // (ux, uy) need not be normalized.
  double boundary_distance(double ux, double uy) const;
};

struct AltitudeBounds {
  double h_min = 0.0;
  double h_max = 0.0;

  bool contains(double h) const { return h >= h_min && h <= h_max; }
};

// Movement strategies of a UAV agent. Enumerator order is the policy
// vector index order and must stay fixed.
enum class Strategy : int {
  up = 0,
  down,
  left,
  right,
  forward,
  backward,
  no_change,
};

inline constexpr int kStrategyCount = 7;
inline constexpr std::array<Strategy, kStrategyCount> kAllStrategies = {
    Strategy::up,      Strategy::down,     Strategy::left,  Strategy::right,
    Strategy::forward, Strategy::backward, Strategy::no_change};

const char* strategy_name(Strategy s);

double distance_3d(const Position3D& a, const Position3D& b);
double horizontal_distance(const Position3D& a, const Position3D& b);

// Executes one movement strategy. up/down move altitude by +/-step_h,
// left/right move x by -/+step_xy, forward/backward move y by +/-step_xy.
// A move whose destination leaves the region or the altitude bounds is
// rejected and the old position is returned unchanged.
Position3D apply_strategy(const Position3D& p, Strategy s, double step_xy,
                          double step_h, const HexRegion& region,
                          const AltitudeBounds& bounds);

// n user positions uniformly distributed over the hexagon at the given
// altitude, by rejection from the bounding box.
std::vector<Position3D> sample_uniform_users(const HexRegion& region,
                                             std::size_t n,
                                             double user_altitude, Rng& rng);

struct GridPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// Triangular lattice clipped to the hexagon with exactly target_count
// points, the lattice pitch found by search. The lattice is centered on
// the region center and rotated 15 degrees relative to the hexagon so
// that clipped cardinalities step in increments of 6 and counts of the
// form 1+6k are reachable. Throws std::runtime_error when no pitch
// yields exactly target_count points.
std::vector<GridPoint> hex_candidate_grid(const HexRegion& region,
                                          std::size_t target_count);

}  // namespace skyplace
