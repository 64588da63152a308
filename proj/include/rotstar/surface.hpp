#pragma once

#include <Eigen/Dense>

#include "rotstar/fixed_point.hpp"

namespace rotstar {

/// The free boundary sampled over zeta in [0,1] with its derivative, the
/// outward normal derivative of Theta, and the oblateness.
struct SurfaceProfile {
  Eigen::ArrayXd zeta_samples;   // ascending, includes 0 and 1
  Eigen::ArrayXd xi1_values;     // Xi_1(zeta)
  Eigen::ArrayXd dxi1_dzeta;     // surface slope
  Eigen::ArrayXd normal_derivs;  // dTheta/dN on the surface
  double sigma = 0.0;            // (Xi_1(0) - Xi_1(1)) / xi1
};

/// Root of r -> Theta(r, zeta) bracketed in (xi1/2, 3 xi1/2), refined to
/// 1e-10 * xi1. Throws NoBracket when the bracket shows no sign change or the
/// radial slope certificate fails (eps beyond the validated range).
double find_xi1(const DistortedSolution& sol, double zeta);

/// Surface slope -(dTheta/dr)^{-1} dTheta/dzeta at (Xi_1(zeta), zeta).
double dxi1_dzeta(const DistortedSolution& sol, double zeta);

/// Outward normal derivative of Theta on the surface point at zeta.
double normal_derivative(const DistortedSolution& sol, double zeta);

/// Sample the free boundary on a Chebyshev-spaced zeta grid of [0,1].
SurfaceProfile surface_profile(const DistortedSolution& sol, int n_samples);

/// sigma = (Xi_1(0) - Xi_1(1)) / xi1 from the profile's endpoint samples.
double oblateness(const SurfaceProfile& profile);

/// Pole-regularity diagnostics near zeta = 1: the slope proxy
/// sqrt(1-zeta^2) dXi_1/dzeta (first) and the meridian-curve slope dZ/dw
/// (second).
std::pair<double, double> pole_slope(const DistortedSolution& sol, double zeta);

}  // namespace rotstar
