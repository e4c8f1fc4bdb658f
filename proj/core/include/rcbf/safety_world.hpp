#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "rcbf/scenario.hpp"

namespace rcbf {

enum class CellClass : std::uint8_t { Interior = 0, Boundary = 1, Exterior = 2 };

/// Cell-centered classification of the plane into the safe domain, its
/// discrete boundary, and the complement. Cell (ix, iy) has center
/// origin + spacing * (ix, iy); cells[iy * nx + ix].
struct DomainMask {
  Eigen::Vector2d origin{0.0, 0.0};
  double spacing = 0.0;
  int nx = 0;
  int ny = 0;
  std::vector<CellClass> cells;

  CellClass at(int ix, int iy) const { return cells[static_cast<std::size_t>(iy) * nx + ix]; }
  Eigen::Vector2d center(int ix, int iy) const {
    return origin + spacing * Eigen::Vector2d(ix, iy);
  }
  std::size_t count(CellClass c) const;
};

/// The six component safety functions: one signed-distance term per obstacle
/// followed by the four affine wall terms
///   x - x_min, x_max - x, y - y_min, y_max - y.
std::vector<double> component_barriers(const Scenario& s,
                                       const Eigen::Vector2d& point);

/// Min-composition of the component barriers; its 0-superlevel set is the
/// safe domain.
double min_barrier(const Scenario& s, const Eigen::Vector2d& point);

/// Width of the narrowest passage between constraint surfaces (obstacle to
/// obstacle and obstacle to wall); falls back to the smaller rectangle side
/// when unconstrained.
double narrowest_passage(const Scenario& s);

/// Classifies a uniform grid covering the bounds padded by at least two
/// cells. A cell is interior iff min_barrier at its center is positive;
/// non-interior cells 4-adjacent to an interior cell form the boundary.
/// Throws NumericalError("degenerate mesh") when the resolution exceeds the
/// narrowest passage.
DomainMask rasterize_domain(const Scenario& s, double resolution);

}  // namespace rcbf
