#pragma once

#include <utility>

#include "rotstar/ode.hpp"

namespace rotstar {

/// The Lane-Emden profile theta(r; nu) with its first zero xi1, the mass
/// coefficient mu1 = -r^2 theta'(r) at xi1, and a dense-output interior
/// representation. Beyond xi1, theta continues by the negative harmonic
/// extension -mu1 (1/xi1 - 1/r). Immutable after construction.
struct LaneEmdenProfile {
  double nu = 0.0;
  double xi1 = 0.0;
  double mu1 = 0.0;
  double tol = 0.0;
  double seed_radius = 0.0;
  OdeSolution interior;  // (theta, dtheta/dr) on [seed_radius, xi1]
};

/// Integrate the Lane-Emden equation from the series seed and locate the
/// first zero. Throws InvalidIndex for nu <= 1, ConfigError for tol outside
/// [1e-14, 1e-4], NoFiniteZero when theta stays positive up to r_max.
LaneEmdenProfile solve_lane_emden(double nu, double tol, double r_max = 100.0);

/// Raw trajectory of (theta, dtheta) on [seed, r_end] regardless of sign
/// (the source term is clamped at zero). Used to probe indices without a
/// finite first zero.
OdeSolution integrate_theta(double nu, double tol, double r_end);

/// theta(r): interior interpolant for r < xi1, harmonic extension beyond.
double eval_theta(const LaneEmdenProfile& p, double r);

/// dtheta/dr(r): dense output below xi1, -mu1/r^2 beyond.
double eval_dtheta(const LaneEmdenProfile& p, double r);

/// Kovetz supremum m(nu) = sup { nu theta^(nu-1) r^2 : 0 <= r <= xi1 } and
/// its maximizer.
std::pair<double, double> kovetz_sup(const LaneEmdenProfile& p);

/// Milne ratio f(r) = -r theta'(r) / theta(r) with f(0) = 0.
/// Throws OutOfDomain for r >= xi1.
double milne_ratio(const LaneEmdenProfile& p, double r);

/// Relative difference between the two sides of the integral identity for
/// int_0^{r1} theta^nu r^2 dr evaluated at the Kovetz maximizer r1, with the
/// nested double integral computed by composite quadrature.
double q_identity_residual(const LaneEmdenProfile& p);

}  // namespace rotstar
