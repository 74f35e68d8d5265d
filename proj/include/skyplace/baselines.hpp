#pragma once

#include <span>
#include <vector>

#include "skyplace/geometry.hpp"
#include "skyplace/rng.hpp"

namespace skyplace {

// Predefined placement candidates for the benchmark schemes: a horizontal
// grid over the region plus a set of discrete altitude levels.
struct CandidateSet {
  std::vector<GridPoint> horizontal;
  std::vector<double> altitudes;
  double fixed_altitude = 100.0;
};

// Builds the default candidate set: `horizontal_count` hex-grid points and
// `altitude_count` levels uniformly spaced over [h_min, h_max] inclusive.
CandidateSet make_candidate_set(const HexRegion& region,
                                const AltitudeBounds& bounds,
                                std::size_t horizontal_count,
                                std::size_t altitude_count,
                                double fixed_altitude);

// Heuristic placement at the candidate point with the largest minimum
// horizontal distance to the existing stations (ties: lowest candidate
// index), at the fixed altitude. Call once per UAV, feeding back the
// already-placed ones.
Position3D place_strategic(const CandidateSet& candidates,
                           std::span<const Position3D> existing_bs);

// Uniform feasible horizontal position at the fixed altitude.
Position3D place_random_fixed(const HexRegion& region, double fixed_altitude,
                              Rng& rng);

// Uniform pick from the horizontal x altitude candidate grid.
Position3D place_random(const CandidateSet& candidates, Rng& rng);

}  // namespace skyplace
