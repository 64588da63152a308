#pragma once

#include "rotstar/grid.hpp"
#include "rotstar/lane_emden.hpp"
#include "rotstar/ode.hpp"

namespace rotstar {

/// Regular solution psi_j of the mode ODE
///   -(1/r^2)(r^2 y')' + j(j+1) y / r^2 = nu theta^(nu-1) y
/// normalized so that psi_j ~ r^j as r -> 0, on [seed, xi1].
struct ModeODESolution {
  int j = 0;
  double nu = 0.0;
  double xi1 = 0.0;
  double seed_radius = 0.0;
  double c2 = 0.0;  // r^(j+2) series coefficient of the seed
  OdeSolution sol;  // (psi, dpsi/dr)

  double value(double r) const;
  double deriv(double r) const;
};

/// Integrate the mode ODE from the series seed r^j (1 + c2 r^2), with
/// c2 = -nu / (2(2j+3)). Throws InvalidMode for odd j or j < 2.
ModeODESolution solve_Ej(const LaneEmdenProfile& p, int j, double tol = 1e-12);

/// Exterior-matching boundary functional ((j+1)/r) psi + dpsi/dr at r = xi1.
double dj_functional(const ModeODESolution& sol);

/// The mode-0 response h0 = y0 - y1/nu of the inhomogeneous equation
///   -(1/r^2)(r^2 y')' = nu theta^(nu-1) y - 1,  h0(0) = 0,
/// built from the particular solution y0 = 1/nu + O(r^4) and the regular
/// homogeneous solution y1 = 1 + O(r^2).
struct H0Solution {
  double nu = 0.0;
  double xi1 = 0.0;
  double seed_radius = 0.0;
  OdeSolution y0;
  OdeSolution y1;

  double value(double r) const;
  double deriv(double r) const;
};

H0Solution solve_h0(const LaneEmdenProfile& p, double tol = 1e-12);

/// C^1 matching of the mode-2 response A2 psi_2 against the exterior
/// -r^2/6 + C2 r^{-3} at xi1, solved in closed form.
struct A2Result {
  double A2 = 0.0;
  double C2 = 0.0;
  double match_residual_value = 0.0;  // relative defects of the two matching rows
  double match_residual_deriv = 0.0;
};

A2Result coeff_A2(const LaneEmdenProfile& p, double tol = 1e-12);

/// First-order response frak_h = h0 + A2 psi_2 P_2 sampled as radial modes on
/// the grid's interior nodes (modes j >= 4 vanish identically; exterior rows
/// are zero -- beyond xi1 the operator representation is the defined one).
ModeSet frak_h(const LaneEmdenProfile& p, const RadialGrid& rg, int jmax,
               double tol = 1e-12);

/// First-order oblateness coefficient: sigma = sigma1 * eps + O(eps^2).
double sigma_first_order(const LaneEmdenProfile& p, double tol = 1e-12);

}  // namespace rotstar
