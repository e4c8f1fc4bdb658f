#pragma once

#include <Eigen/Core>

#include "rcbf/grid_field.hpp"
#include "rcbf/scenario.hpp"

namespace rcbf {

/// Output of the smooth single-integrator safety filter.
struct SafeVelocity {
  Eigen::Vector2d v_s{0.0, 0.0};  // filtered velocity, m/s
  double theta_s = 0.0;           // atan2 of v_s when defined, rad in (-pi, pi]
  bool heading_defined = false;   // false when ||v_s|| <= eps_v
  double a = 0.0;                 // grad h0 . v_p + alpha h0
  double b = 0.0;                 // ||grad h0||^2
  double lambda = 0.0;            // smooth filter gain, >= 0
};

/// lambda = 0 below this ||grad h0||^2 threshold; the filter direction is
/// undefined there and v_p is the continuous limit.
inline constexpr double kEpsGradSq = 1e-10;
/// Heading is undefined below this ||v_s|| threshold.
inline constexpr double kEpsSpeed = 1e-8;

/// Reference position at time t: (v_ref * t, a_d * sin(c_d * x_d + phi_d)).
Eigen::Vector2d reference_position(double t, const Scenario& s);

/// Proportional single-integrator tracking velocity K_v * (r_d(t) - p).
Eigen::Vector2d nominal_velocity(double t, const Eigen::Vector2d& point,
                                 const Scenario& s);

/// Smooth safety filter: v_s = v_p + lambda(a, b) * grad h0 with the
/// half-Sontag gain lambda = (-a + sqrt(a^2 + alpha_q b^2)) / (2b).
SafeVelocity safe_velocity(double t, const Eigen::Vector2d& point,
                           const GridField& field, const Scenario& s);

/// Heading of a filtered velocity, wrapped to (-pi, pi]. Throws
/// NumericalError("heading undefined") when ||v_s|| <= eps_v; callers fall
/// back to the previous heading.
double safe_heading(const SafeVelocity& sv);

}  // namespace rcbf
