#pragma once

#include "rcbf/grid_field.hpp"
#include "rcbf/safety_world.hpp"

namespace rcbf {

/// Right-hand side of the field equation, one constant per region.
/// Negative inside the safe domain so the solution is positive there;
/// positive outside so it is negative there.
struct Forcing {
  double interior_value = -4.0;
  double exterior_value = 4.0;

  Forcing() = default;
  Forcing(double interior, double exterior);
};

struct SolveStats {
  int iterations = 0;
  double residual = 0.0;
};

/// Solves the five-point discrete Dirichlet problem
///   Lap u = forcing   on interior and exterior cells,
///   u = 0             on boundary cells,
/// with mirrored ghost values at the outer grid edge, by red-black SOR.
/// Convergence is reached when the residual max-norm drops below tol.
/// Throws NumericalError (carrying the final residual) on non-convergence.
GridField solve_poisson(const DomainMask& mask, const Forcing& forcing,
                        double tol, int max_iters, double omega = 1.9,
                        SolveStats* stats = nullptr);

/// Discrete residual Lap u - forcing at one non-boundary cell, using the same
/// mirrored-edge stencil as the solver.
double stencil_residual(const GridField& f, const DomainMask& mask,
                        const Forcing& forcing, int ix, int iy);

/// Max-norm of the residual over all non-boundary cells.
double max_stencil_residual(const GridField& f, const DomainMask& mask,
                            const Forcing& forcing);

/// Rasterizes the scenario and solves with its solver knobs; the usual way to
/// build the safety field.
GridField solve_scenario_field(const Scenario& s, SolveStats* stats = nullptr);

}  // namespace rcbf
