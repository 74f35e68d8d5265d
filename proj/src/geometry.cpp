#include "skyplace/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace skyplace {

namespace {
constexpr double kSqrt3 = 1.7320508075688772;
// Lattice-to-hexagon rotation used by hex_candidate_grid. A generic angle
// (no shared mirror axis with the hexagon) keeps lattice orbits at size 6.
constexpr double kLatticeAngleRad = 15.0 * 3.14159265358979323846 / 180.0;
}  // namespace

bool HexRegion::contains(double x, double y) const {
  const double dx = std::abs(x - cx);
  const double dy = std::abs(y - cy);
  const double a2 = kSqrt3 * radius;  // twice the apothem
  return dy <= 0.5 * a2 && kSqrt3 * dx + dy <= a2;
}

double HexRegion::boundary_distance(double ux, double uy) const {
  const double n = std::hypot(ux, uy);
  if (n == 0.0) return 0.0;
  const double cu = std::abs(ux / n);
  const double su = std::abs(uy / n);
  const double a = 0.5 * kSqrt3 * radius;  // apothem
  double t = std::numeric_limits<double>::infinity();
  if (su > 0.0) t = std::min(t, a / su);
  const double e = kSqrt3 * cu + su;  // |<(sqrt3,1), u>|, both edge families
  if (e > 0.0) t = std::min(t, 2.0 * a / e);
  return t;
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::up: return "up";
    case Strategy::down: return "down";
    case Strategy::left: return "left";
    case Strategy::right: return "right";
    case Strategy::forward: return "forward";
    case Strategy::backward: return "backward";
    case Strategy::no_change: return "no-change";
  }
  return "?";
}

double distance_3d(const Position3D& a, const Position3D& b) {
  return std::hypot(a.x - b.x, a.y - b.y, a.h - b.h);
}

double horizontal_distance(const Position3D& a, const Position3D& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Position3D apply_strategy(const Position3D& p, Strategy s, double step_xy,
                          double step_h, const HexRegion& region,
                          const AltitudeBounds& bounds) {
  Position3D q = p;
  switch (s) {
    case Strategy::up: q.h += step_h; break;
    case Strategy::down: q.h -= step_h; break;
    case Strategy::left: q.x -= step_xy; break;
    case Strategy::right: q.x += step_xy; break;
    case Strategy::forward: q.y += step_xy; break;
    case Strategy::backward: q.y -= step_xy; break;
    case Strategy::no_change: return p;
  }
  if (!region.contains(q) || !bounds.contains(q.h)) return p;  // rejected
  return q;
}

std::vector<Position3D> sample_uniform_users(const HexRegion& region,
                                             std::size_t n,
                                             double user_altitude, Rng& rng) {
  std::vector<Position3D> out;
  out.reserve(n);
  const double half_h = 0.5 * kSqrt3 * region.radius;
  while (out.size() < n) {
    const double x = rng.uniform(region.cx - region.radius, region.cx + region.radius);
    const double y = rng.uniform(region.cy - half_h, region.cy + half_h);
    if (region.contains(x, y)) out.push_back({x, y, user_altitude});
  }
  return out;
}

std::vector<GridPoint> hex_candidate_grid(const HexRegion& region,
                                          std::size_t target_count) {
  if (target_count < 1) throw std::invalid_argument("target_count must be >= 1");

  // Every lattice point is pitch * v(row, col) rotated by the fixed angle,
  // so the whole grid scales linearly with the pitch and each cell stays
  // inside the hexagon for pitch <= t*(direction)/|v|. Ranking those
  // critical pitches makes the clipped count an exact step function of the
  // pitch: the search reduces to picking a pitch between rank target-1 and
  // rank target.
  struct Cell {
    double crit;  // critical pitch
    double ux, uy;  // unit-pitch offset from the center, already rotated
  };

  const double ct = std::cos(kLatticeAngleRad);
  const double st = std::sin(kLatticeAngleRad);

  // Index range wide enough that every cell which could rank in the top
  // target_count+1 is enumerated: critical pitches vary with |v| up to the
  // apothem/vertex ratio 2/sqrt(3), so cover 4x the cell count.
  const int bound = static_cast<int>(std::ceil(
                        std::sqrt(static_cast<double>(target_count) + 1.0))) + 4;

  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(2 * bound + 1) * (2 * bound + 1));
  for (int row = -bound; row <= bound; ++row) {
    const double vy = 0.5 * kSqrt3 * row;
    const double off = (row % 2 != 0) ? 0.5 : 0.0;
    for (int col = -bound; col <= bound; ++col) {
      if (row == 0 && col == 0) continue;  // center handled separately
      const double vx = col + off;
      const double ux = ct * vx - st * vy;
      const double uy = st * vx + ct * vy;
      const double len = std::hypot(ux, uy);
      cells.push_back({region.boundary_distance(ux, uy) / len, ux, uy});
    }
  }
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return a.crit > b.crit; });

  if (target_count == 1) {
    return {GridPoint{region.cx, region.cy}};
  }

  const std::size_t k = target_count - 1;  // non-center cells needed
  if (k >= cells.size()) throw std::runtime_error("target_count too large for search range");
  const double hi = cells[k - 1].crit;
  const double lo = cells[k].crit;
  // Cells related by the shared six-fold symmetry have equal critical
  // pitches up to rounding; a boundary inside such an orbit is a tie, not
  // a usable gap.
  if (!(hi - lo > 1e-9 * hi)) {
    throw std::runtime_error(
        "no lattice pitch yields exactly " + std::to_string(target_count) +
        " candidate points in this region");
  }
  const double pitch = 0.5 * (hi + lo);

  std::vector<GridPoint> pts;
  pts.reserve(target_count);
  pts.push_back({region.cx, region.cy});
  for (std::size_t i = 0; i < k; ++i) {
    pts.push_back({region.cx + pitch * cells[i].ux, region.cy + pitch * cells[i].uy});
  }
  // Stable geometric order, independent of the enumeration above.
  std::sort(pts.begin(), pts.end(), [](const GridPoint& a, const GridPoint& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  return pts;
}

}  // namespace skyplace
