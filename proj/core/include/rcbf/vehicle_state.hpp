#pragma once

#include <Eigen/Core>

#include "rcbf/angles.hpp"

namespace rcbf {

/// Planar pose; theta is kept wrapped to (-pi, pi].
struct VehicleState {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Eigen::Vector2d position() const { return {x, y}; }
  Eigen::Vector3d vec() const { return {x, y, theta}; }
  static VehicleState from_vec(const Eigen::Vector3d& v) {
    return {v.x(), v.y(), wrap_angle(v.z())};
  }
};

/// Linear and angular velocity command.
struct ControlInput {
  double v = 0.0;      // m/s
  double omega = 0.0;  // rad/s

  Eigen::Vector2d vec() const { return {v, omega}; }
};

}  // namespace rcbf
