#include "rcbf/safety_world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rcbf/errors.hpp"

namespace rcbf {

std::size_t DomainMask::count(CellClass c) const {
  return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), c));
}

std::vector<double> component_barriers(const Scenario& s,
                                       const Eigen::Vector2d& point) {
  std::vector<double> h;
  h.reserve(s.obstacles.size() + 4);
  for (const auto& o : s.obstacles) h.push_back((point - o.center).norm() - o.radius);
  h.push_back(point.x() - s.bounds.x_min);
  h.push_back(s.bounds.x_max - point.x());
  h.push_back(point.y() - s.bounds.y_min);
  h.push_back(s.bounds.y_max - point.y());
  return h;
}

double min_barrier(const Scenario& s, const Eigen::Vector2d& point) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& o : s.obstacles)
    m = std::min(m, (point - o.center).norm() - o.radius);
  m = std::min(m, point.x() - s.bounds.x_min);
  m = std::min(m, s.bounds.x_max - point.x());
  m = std::min(m, point.y() - s.bounds.y_min);
  m = std::min(m, s.bounds.y_max - point.y());
  return m;
}

double narrowest_passage(const Scenario& s) {
  double gap = std::min(s.bounds.x_max - s.bounds.x_min,
                        s.bounds.y_max - s.bounds.y_min);
  for (std::size_t i = 0; i < s.obstacles.size(); ++i) {
    const auto& a = s.obstacles[i];
    // Gap between the obstacle disc and each wall plane, where the disc
    // actually overlaps the rectangle's extent along that wall.
    const double to_wall[4] = {
        (a.center.x() - s.bounds.x_min) - a.radius,
        (s.bounds.x_max - a.center.x()) - a.radius,
        (a.center.y() - s.bounds.y_min) - a.radius,
        (s.bounds.y_max - a.center.y()) - a.radius,
    };
    for (double g : to_wall)
      if (g >= 0.0) gap = std::min(gap, g);
    for (std::size_t j = i + 1; j < s.obstacles.size(); ++j) {
      const auto& b = s.obstacles[j];
      const double g = (a.center - b.center).norm() - a.radius - b.radius;
      if (g >= 0.0) gap = std::min(gap, g);
    }
  }
  return gap;
}

DomainMask rasterize_domain(const Scenario& s, double resolution) {
  if (!(resolution > 0.0))
    throw NumericalError("rasterize: resolution must be > 0");
  if (resolution > narrowest_passage(s))
    throw NumericalError("degenerate mesh: resolution " +
                         std::to_string(resolution) +
                         " exceeds narrowest passage " +
                         std::to_string(narrowest_passage(s)));

  // Pad enough that barrier evaluation stays inside the grid even for
  // estimates and perturbation samples up to two error boxes outside a wall,
  // plus the finite-difference stencil reach.
  const double reach =
      2.0 * std::max(s.error_box.x(), s.error_box.y()) + 2.0 * resolution;
  const int pad = std::max(2, static_cast<int>(std::ceil(reach / resolution)));

  const int span_x = static_cast<int>(
      std::llround((s.bounds.x_max - s.bounds.x_min) / resolution));
  const int span_y = static_cast<int>(
      std::llround((s.bounds.y_max - s.bounds.y_min) / resolution));

  DomainMask m;
  m.spacing = resolution;
  m.nx = span_x + 2 * pad;
  m.ny = span_y + 2 * pad;
  m.origin = {s.bounds.x_min - pad * resolution + 0.5 * resolution,
              s.bounds.y_min - pad * resolution + 0.5 * resolution};
  m.cells.assign(static_cast<std::size_t>(m.nx) * m.ny, CellClass::Exterior);

  for (int iy = 0; iy < m.ny; ++iy)
    for (int ix = 0; ix < m.nx; ++ix)
      if (min_barrier(s, m.center(ix, iy)) > 0.0)
        m.cells[static_cast<std::size_t>(iy) * m.nx + ix] = CellClass::Interior;

  auto interior = [&m](int ix, int iy) {
    return ix >= 0 && ix < m.nx && iy >= 0 && iy < m.ny &&
           m.at(ix, iy) == CellClass::Interior;
  };
  for (int iy = 0; iy < m.ny; ++iy) {
    for (int ix = 0; ix < m.nx; ++ix) {
      if (m.at(ix, iy) != CellClass::Exterior) continue;
      if (interior(ix - 1, iy) || interior(ix + 1, iy) || interior(ix, iy - 1) ||
          interior(ix, iy + 1))
        m.cells[static_cast<std::size_t>(iy) * m.nx + ix] = CellClass::Boundary;
    }
  }

  if (m.count(CellClass::Interior) == 0)
    throw NumericalError("degenerate mesh: no interior cells");
  return m;
}

}  // namespace rcbf
