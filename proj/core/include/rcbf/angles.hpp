#pragma once

#include <cmath>
#include <numbers>

namespace rcbf {

/// Wraps an angle to the project-wide convention (-pi, pi].
inline double wrap_angle(double a) {
  double r = std::remainder(a, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
  return r;
}

/// Shortest signed angular difference a - b, wrapped to (-pi, pi].
inline double angle_diff(double a, double b) { return wrap_angle(a - b); }

}  // namespace rcbf
