#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rotstar/grid.hpp"
#include "rotstar/lane_emden.hpp"
#include "rotstar/potential.hpp"

namespace rotstar {

/// theta sampled on the product grid (constant in zeta).
GridFunction theta_grid(const LaneEmdenProfile& p, const RadialGrid& rg,
                        const AngularGrid& ag);

/// The nonlinear potential map G(u) = 1 + K u_sharp^nu - (K u_sharp^nu)(0,0),
/// realized through mode projection, the multipole potential, and synthesis.
GridFunction apply_G(const GridFunction& u, double nu);

/// Frechet derivative of G at theta applied to h: mode-wise Nystrom quadrature
/// of G_j against nu theta^(nu-1) h_j r'^2 on [0, xi1], with the mode-0 kernel
/// carrying the origin subtraction G_0 - 1/r'.
GridFunction apply_DG_theta(const LaneEmdenProfile& p, const GridFunction& h);

/// Remainder omega(h) = G(theta + h) - G(theta) - DG(theta) h, evaluated
/// definitionally (the three-term form is algebraically identical to the
/// parameter-integral form and avoids the inner integral).
GridFunction omega(const LaneEmdenProfile& p, const GridFunction& h);

/// Factorized per-mode systems for (1 - DG(theta))^{-1}. The mode systems act
/// on the interior nodes (r < xi1); exterior values follow by one explicit
/// quadrature pass. Immutable and shareable after construction.
struct ResolventFactorization {
  double nu = 0.0;
  int jmax = 0;
  RadialGrid rgrid;
  AngularGrid agrid;
  std::vector<Eigen::PartialPivLU<Eigen::MatrixXd>> lu;  // per even mode, interior
  std::vector<Eigen::MatrixXd> dg;       // per even mode, n_all x n_interior
  std::vector<double> condition;         // 1/rcond per mode
  std::vector<std::string> warnings;
};

/// Assemble and factorize the mode systems M_j = I - DG_j. Throws
/// SingularMode when a factorization is numerically singular (grid-resolution
/// failure; refine the radial panels). For nu in [1,2) a warning is recorded:
/// the contraction theory needs nu >= 2, the discretization still runs.
ResolventFactorization build_resolvent(const LaneEmdenProfile& p, const RadialGrid& rg,
                                       const AngularGrid& ag);

/// Solve (1 - DG(theta)) h = s mode by mode and synthesize h.
GridFunction resolvent_apply(const ResolventFactorization& fact, const GridFunction& s);

/// DG(theta) h through the factorization's stored matrices (bit-identical to
/// the operator the resolvent inverts).
GridFunction dg_apply(const ResolventFactorization& fact, const GridFunction& h);

}  // namespace rotstar
