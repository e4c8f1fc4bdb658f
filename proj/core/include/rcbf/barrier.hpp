#pragma once

#include <functional>

#include "rcbf/grid_field.hpp"
#include "rcbf/scenario.hpp"
#include "rcbf/vehicle_state.hpp"

namespace rcbf {

/// Barrier value and every derivative the safety constraint needs at one
/// (t, state). For the driftless unicycle the drift Lie derivative is
/// identically zero and
///   L_gv = dh_dx cos(theta) + dh_dy sin(theta),   L_gw = dh_dtheta.
struct BarrierEval {
  double h = 0.0;
  double dh_dx = 0.0;      // 1/m
  double dh_dy = 0.0;      // 1/m
  double dh_dtheta = 0.0;  // 1/rad
  double dh_dt = 0.0;      // 1/s
  double l_gv = 0.0;       // coefficient of v in hdot
  double l_gw = 0.0;       // coefficient of omega in hdot
  double l_f = 0.0;        // drift term, 0 for the unicycle
};

/// Safe-heading provider theta_s(t, x, y). The production provider runs the
/// single-integrator filter on the solved field; tests may substitute
/// analytic headings.
using HeadingFn = std::function<double(double t, double x, double y)>;

/// Heading provider backed by the half-Sontag filter; returns `fallback`
/// where the filtered velocity vanishes and the heading is undefined.
HeadingFn make_safe_heading(const GridField& field, const Scenario& s,
                            double fallback = 0.0);

/// Modified barrier h(t, x) = h0(x, y) - (1/mu) (1 - cos(theta - theta_s)).
/// Positive h requires both spatial safety and heading alignment.
double eval_h(double t, const VehicleState& state, const GridField& field,
              const Scenario& s, const HeadingFn& theta_s);

/// Spatial and time partials by central differences of eval_h (steps
/// spacing/2 and dt/10); the theta partial is analytic. Requires finite-
/// difference clearance from the field edge.
BarrierEval eval_derivatives(double t, const VehicleState& state,
                             const GridField& field, const Scenario& s,
                             const HeadingFn& theta_s);

/// Position-only barrier h = h0: gradient from the field, no heading term.
/// Its omega channel is identically zero, which is the defect the modified
/// barrier repairs.
BarrierEval eval_h0_barrier(const VehicleState& state, const GridField& field);

}  // namespace rcbf
