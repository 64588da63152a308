#pragma once

namespace rotstar {

/// Discretization and iteration knobs shared by the solver stack.
/// All defaults reproduce the reference desk-scale setup.
struct SolverConfig {
  double nu = 3.0;
  int jmax = 8;               // even Legendre-mode cutoff (modes 0,2,...,jmax)
  int panels_interior = 8;    // radial panels on [0, xi1]
  int panels_exterior = 4;    // radial panels on [xi1, R0]
  int nodes_per_panel = 16;   // Gauss nodes per radial panel
  int angular_order = 32;     // Gauss-Legendre order in zeta (even, >= 2*jmax)
  double fp_tol = 1e-10;      // sup-norm stop for the fixed-point iteration
  int max_iter = 50;
  double r0_factor = 2.0;     // R0 = r0_factor * xi1, must be >= 2
  double ode_tol = 1e-12;     // Lane-Emden / mode-ODE integration tolerance

  void validate() const;  // throws ConfigError
};

}  // namespace rotstar
