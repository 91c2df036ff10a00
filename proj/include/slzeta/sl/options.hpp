#pragma once

namespace slzeta::sl {

/// Numerical knobs shared by the three zeta paths. Defaults are the ones
/// reported in CLI output.
struct SolverOptions {
  // Initial RK4 intervals for psi_-/psi_+; doubled until the step-halving
  // estimate is below ode_tolerance.
  int basis_intervals = 1024;
  int max_basis_intervals = 1 << 16;
  double ode_tolerance = 1e-12;
  // |W| below this fraction of its natural scale counts as a collision.
  double collision_tolerance = 1e-10;

  // Prufer shooting: coarsest grid and the largest phase advance allowed
  // per RK4 step (finer grids are picked as lambda grows).
  int prufer_intervals = 512;
  double prufer_step_phase = 1.0;
  double eigen_tolerance = 1e-10;

  int trace_panel_order = 4;
  int cell_order = 8;
};

}  // namespace slzeta::sl
