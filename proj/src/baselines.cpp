#include "skyplace/baselines.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace skyplace {

CandidateSet make_candidate_set(const HexRegion& region,
                                const AltitudeBounds& bounds,
                                std::size_t horizontal_count,
                                std::size_t altitude_count,
                                double fixed_altitude) {
  CandidateSet c;
  c.horizontal = hex_candidate_grid(region, horizontal_count);
  c.altitudes.reserve(altitude_count);
  if (altitude_count == 1) {
    c.altitudes.push_back(bounds.h_min);
  } else {
    const double pitch = (bounds.h_max - bounds.h_min) /
                         static_cast<double>(altitude_count - 1);
    for (std::size_t i = 0; i < altitude_count; ++i) {
      c.altitudes.push_back(bounds.h_min + pitch * static_cast<double>(i));
    }
  }
  c.fixed_altitude = fixed_altitude;
  return c;
}

Position3D place_strategic(const CandidateSet& candidates,
                           std::span<const Position3D> existing_bs) {
  if (candidates.horizontal.empty()) {
    throw std::invalid_argument("place_strategic: empty candidate list");
  }
  std::size_t best = 0;
  double best_min = -1.0;
  for (std::size_t i = 0; i < candidates.horizontal.size(); ++i) {
    const GridPoint& g = candidates.horizontal[i];
    double min_d = std::numeric_limits<double>::infinity();
    for (const Position3D& b : existing_bs) {
      min_d = std::min(min_d, std::hypot(g.x - b.x, g.y - b.y));
    }
    if (min_d > best_min) {
      best_min = min_d;
      best = i;
    }
  }
  const GridPoint& g = candidates.horizontal[best];
  return {g.x, g.y, candidates.fixed_altitude};
}

Position3D place_random_fixed(const HexRegion& region, double fixed_altitude,
                              Rng& rng) {
  const double half_h = 0.5 * std::sqrt(3.0) * region.radius;
  while (true) {
    const double x = rng.uniform(region.cx - region.radius, region.cx + region.radius);
    const double y = rng.uniform(region.cy - half_h, region.cy + half_h);
    if (region.contains(x, y)) return {x, y, fixed_altitude};
  }
}

Position3D place_random(const CandidateSet& candidates, Rng& rng) {
  const GridPoint& g = candidates.horizontal[rng.pick_index(candidates.horizontal.size())];
  const double h = candidates.altitudes[rng.pick_index(candidates.altitudes.size())];
  return {g.x, g.y, h};
}

}  // namespace skyplace
