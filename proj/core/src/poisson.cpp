#include "rcbf/poisson.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <vector>

#include "rcbf/errors.hpp"
#include "rcbf/parallel.hpp"

namespace rcbf {

Forcing::Forcing(double interior, double exterior)
    : interior_value(interior), exterior_value(exterior) {
  if (!(interior_value < 0.0))
    throw ConfigError("forcing: interior value must be < 0");
  if (!(exterior_value > 0.0))
    throw ConfigError("forcing: exterior value must be > 0");
}

namespace {

// Sum of in-grid neighbor values plus mirrored ghosts for off-grid
// neighbors; the mirror contributes the center value itself.
inline double neighbor_sum(const std::vector<double>& u, int nx, int ny,
                           int ix, int iy) {
  const std::size_t c = static_cast<std::size_t>(iy) * nx + ix;
  double s = 0.0;
  s += (ix > 0) ? u[c - 1] : u[c];
  s += (ix < nx - 1) ? u[c + 1] : u[c];
  s += (iy > 0) ? u[c - nx] : u[c];
  s += (iy < ny - 1) ? u[c + nx] : u[c];
  return s;
}

}  // namespace

double stencil_residual(const GridField& f, const DomainMask& mask,
                        const Forcing& forcing, int ix, int iy) {
  const CellClass cls = mask.at(ix, iy);
  if (cls == CellClass::Boundary) return 0.0;
  const double rhs = (cls == CellClass::Interior) ? forcing.interior_value
                                                  : forcing.exterior_value;
  const double s2 = f.spacing * f.spacing;
  const double lap =
      (neighbor_sum(f.values, f.nx, f.ny, ix, iy) - 4.0 * f.at(ix, iy)) / s2;
  return lap - rhs;
}

double max_stencil_residual(const GridField& f, const DomainMask& mask,
                            const Forcing& forcing) {
  double r = 0.0;
  for (int iy = 0; iy < f.ny; ++iy)
    for (int ix = 0; ix < f.nx; ++ix)
      r = std::max(r, std::abs(stencil_residual(f, mask, forcing, ix, iy)));
  return r;
}

GridField solve_poisson(const DomainMask& mask, const Forcing& forcing,
                        double tol, int max_iters, double omega,
                        SolveStats* stats) {
  if (!(tol > 0.0)) throw ConfigError("solve_poisson: tol must be > 0");
  if (mask.count(CellClass::Interior) == 0)
    throw NumericalError("solve_poisson: mask has no interior cells");
  (void)Forcing(forcing.interior_value, forcing.exterior_value);  // sign check

  GridField f;
  f.origin = mask.origin;
  f.spacing = mask.spacing;
  f.nx = mask.nx;
  f.ny = mask.ny;
  f.mask = mask.cells;
  f.values.assign(static_cast<std::size_t>(f.nx) * f.ny, 0.0);

  const int nx = f.nx;
  const int ny = f.ny;
  const double s2 = f.spacing * f.spacing;

  // Per-cell scaled right-hand side; boundary cells are pinned at zero.
  std::vector<double> rhs_s2(f.values.size(), 0.0);
  std::vector<std::uint8_t> fixed(f.values.size(), 0);
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const std::size_t c = static_cast<std::size_t>(iy) * nx + ix;
      switch (mask.cells[c]) {
        case CellClass::Boundary:
          fixed[c] = 1;
          break;
        case CellClass::Interior:
          rhs_s2[c] = s2 * forcing.interior_value;
          break;
        case CellClass::Exterior:
          rhs_s2[c] = s2 * forcing.exterior_value;
          break;
      }
    }
  }

  auto& u = f.values;
  auto sweep_color = [&](int color) {
    parallel_for(0, static_cast<std::size_t>(ny), [&](std::size_t lo, std::size_t hi) {
      for (std::size_t iy = lo; iy < hi; ++iy) {
        const int start = (static_cast<int>(iy) % 2 == color) ? 0 : 1;
        for (int ix = start; ix < nx; ix += 2) {
          const std::size_t c = iy * nx + ix;
          if (fixed[c]) continue;
          // Mirrored ghosts shift to the diagonal: (4 - m) with m off-grid
          // neighbors.
          double sum = 0.0;
          int diag = 4;
          if (ix > 0) sum += u[c - 1]; else --diag;
          if (ix < nx - 1) sum += u[c + 1]; else --diag;
          if (iy > 0) sum += u[c - nx]; else --diag;
          if (iy < static_cast<std::size_t>(ny - 1)) sum += u[c + nx]; else --diag;
          const double gs = (sum - rhs_s2[c]) / diag;
          u[c] += omega * (gs - u[c]);
        }
      }
    });
  };

  double residual = std::numeric_limits<double>::infinity();
  int iter = 0;
  for (; iter < max_iters; ++iter) {
    sweep_color(0);
    sweep_color(1);

    double r = 0.0;
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        const std::size_t c = static_cast<std::size_t>(iy) * nx + ix;
        if (fixed[c]) continue;
        const double lap = (neighbor_sum(u, nx, ny, ix, iy) - 4.0 * u[c]);
        r = std::max(r, std::abs((lap - rhs_s2[c]) / s2));
      }
    }
    residual = r;
    if (residual < tol) break;
  }

  if (stats) {
    stats->iterations = std::min(iter + 1, max_iters);
    stats->residual = residual;
  }
  if (residual >= tol)
    throw NumericalError("solve_poisson: no convergence after " +
                         std::to_string(max_iters) +
                         " sweeps, residual = " + std::to_string(residual));
  return f;
}

GridField solve_scenario_field(const Scenario& s, SolveStats* stats) {
  const DomainMask mask = rasterize_domain(s, s.solver.resolution);
  const Forcing forcing(s.solver.interior_forcing, s.solver.exterior_forcing);
  return solve_poisson(mask, forcing, s.solver.tol, s.solver.max_iters,
                       s.solver.sor_omega, stats);
}

}  // namespace rcbf
