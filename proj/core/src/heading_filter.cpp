#include "rcbf/heading_filter.hpp"

#include <cmath>

#include "rcbf/angles.hpp"
#include "rcbf/errors.hpp"

namespace rcbf {

Eigen::Vector2d reference_position(double t, const Scenario& s) {
  const double xd = s.reference.v_ref * t;
  const double yd =
      s.reference.a_d * std::sin(s.reference.c_d * xd + s.reference.phi_d);
  return {xd, yd};
}

Eigen::Vector2d nominal_velocity(double t, const Eigen::Vector2d& point,
                                 const Scenario& s) {
  return s.gains.k_v * (reference_position(t, s) - point);
}

SafeVelocity safe_velocity(double t, const Eigen::Vector2d& point,
                           const GridField& field, const Scenario& s) {
  const Eigen::Vector2d v_p = nominal_velocity(t, point, s);
  const double h0 = sample(field, point);
  const Eigen::Vector2d g = gradient(field, point);

  SafeVelocity out;
  out.b = g.squaredNorm();
  out.a = g.dot(v_p) + s.alpha_slope * h0;
  if (out.b < kEpsGradSq) {
    out.lambda = 0.0;
    out.v_s = v_p;
  } else {
    out.lambda = (-out.a + std::sqrt(out.a * out.a +
                                     s.alpha_q * out.b * out.b)) /
                 (2.0 * out.b);
    out.v_s = v_p + out.lambda * g;
  }
  if (out.v_s.norm() > kEpsSpeed) {
    out.heading_defined = true;
    out.theta_s = wrap_angle(std::atan2(out.v_s.y(), out.v_s.x()));
  }
  return out;
}

double safe_heading(const SafeVelocity& sv) {
  if (!sv.heading_defined)
    throw NumericalError("heading undefined: safe velocity is zero");
  return sv.theta_s;
}

}  // namespace rcbf
