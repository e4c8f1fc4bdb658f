#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "rcbf/safety_world.hpp"

namespace rcbf {

/// Scalar field sampled at uniform cell centers with bilinear evaluation and
/// central-difference derivatives. `mask` carries the cell classification the
/// field was solved on; it is empty for fields loaded from disk.
struct GridField {
  Eigen::Vector2d origin{0.0, 0.0};
  double spacing = 0.0;
  int nx = 0;
  int ny = 0;
  std::vector<double> values;     // values[iy * nx + ix]
  std::vector<CellClass> mask;    // optional, same layout

  double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * nx + ix]; }
  double& at(int ix, int iy) { return values[static_cast<std::size_t>(iy) * nx + ix]; }
  Eigen::Vector2d center(int ix, int iy) const {
    return origin + spacing * Eigen::Vector2d(ix, iy);
  }

  double extent_x_min() const { return origin.x(); }
  double extent_x_max() const { return origin.x() + spacing * (nx - 1); }
  double extent_y_min() const { return origin.y(); }
  double extent_y_max() const { return origin.y() + spacing * (ny - 1); }

  /// True when the point is inside the cell-center hull shrunk by `margin`.
  bool contains(const Eigen::Vector2d& p, double margin = 0.0) const;
};

/// Bilinear interpolation of the four surrounding cell values; exact at cell
/// centers. Throws NumericalError("out of field") outside the center hull.
double sample(const GridField& f, const Eigen::Vector2d& p);

/// Central difference of `sample` with step = spacing. Requires one cell of
/// clearance from the grid edge.
Eigen::Vector2d gradient(const GridField& f, const Eigen::Vector2d& p);

/// Second-order central differences of `sample`; the mixed partials are
/// averaged so the result is exactly symmetric.
Eigen::Matrix2d hessian(const GridField& f, const Eigen::Vector2d& p);

/// Binary field file: magic "RCBFPSF1", u32 version, f64 origin_x, origin_y,
/// spacing, u32 nx, ny, then nx*ny little-endian f64 values row-major.
void save_field(const GridField& f, const std::string& path);
GridField load_field(const std::string& path);

}  // namespace rcbf
