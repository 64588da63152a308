#pragma once

#include <utility>
#include <vector>

#include "rotstar/operator_core.hpp"

namespace rotstar {

/// Per-iteration convergence diagnostics of the contraction iteration.
struct IterationReport {
  std::vector<double> diffs;   // ||w^(n+1) - w^(n)|| per iteration
  std::vector<double> ratios;  // successive-difference ratios
  double residual = 0.0;       // final defect of the integral equation
  int iterations = 0;
  bool converged = false;
};

/// A converged rotating equilibrium: Theta = theta + eps * w together with
/// the mode representation of its own source Theta_sharp^nu, which makes the
/// integral representation evaluable anywhere (including r > R0).
struct DistortedSolution {
  double nu = 0.0;
  double eps = 0.0;
  LaneEmdenProfile profile;
  GridFunction w;          // carries the grids
  ModeSet theta_modes;     // modes of Theta_sharp^nu
  double origin_potential = 0.0;  // (K Theta_sharp^nu)(0,0)
  IterationReport report;
};

/// Centrifugal source g(r,zeta) = (1/4)(1 - zeta^2) r^2.
double g_source(double r, double zeta);

/// Run the iteration w <- (1 - DG(theta))^{-1} (g + omega(eps w)/eps) from
/// w = 0. eps = 0 converges in one step (the omega term is 0 by the limit
/// convention) and returns Theta = theta. Throws NotContracting after two
/// consecutive non-contracting steps, MaxIterExceeded past the budget.
DistortedSolution solve_distorted(const SolverConfig& config, double eps);

/// Sup-norm defect of Theta - eps*g - G(Theta) over the grid nodes.
double residual(const DistortedSolution& sol);

/// Theta sampled on the grid (theta + eps*w).
GridFunction Theta_grid(const DistortedSolution& sol);

/// Evaluate Theta anywhere through the integral representation
/// eps*g + 1 + K Theta_sharp^nu - (K Theta_sharp^nu)(0,0).
double eval_Theta(const DistortedSolution& sol, double r, double zeta);

/// Gradient (dTheta/dr, dTheta/dzeta) by differentiating the representation.
std::pair<double, double> eval_grad_Theta(const DistortedSolution& sol, double r,
                                          double zeta);

}  // namespace rotstar
