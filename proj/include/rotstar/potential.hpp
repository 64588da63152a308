#pragma once

#include "rotstar/grid.hpp"

namespace rotstar {

/// Complete elliptic integral of the first kind, parameter convention
/// K(m) = int_0^{pi/2} (1 - m sin^2)^(-1/2), via the arithmetic-geometric
/// mean. Requires m in [0, 1).
double elliptic_K_agm(double m);

struct KernelEval {
  double value = 0.0;
  bool near_singular = false;  // the two points are within the configured separation
};

/// Azimuthal average of the Newton kernel:
///   K = int_0^{2pi} dbeta / sqrt(r^2 + r'^2 - 2 r r' (ss' cos beta + zeta zeta'))
/// evaluated as 4/sqrt(a+b) K(2b/(a+b)). Throws CoincidentPoints when a - b
/// underflows floor * (a + b).
KernelEval azimuthal_kernel_eval(double r, double zeta, double rp, double zetap,
                                 double floor = 1e-14);
double azimuthal_kernel(double r, double zeta, double rp, double zetap);

/// Per-mode Green function G_j(r,r') = min^j / ((2j+1) max^{j+1}).
double mode_green(int j, double r, double rp);

/// dG_j/dr at fixed r'; piecewise smooth with a jump across r = r'.
double mode_green_dr(int j, double r, double rp);

/// Mode-wise Newtonian potential: (K rho)_j(r_i) = int G_j(r_i, r') rho_j(r') r'^2 dr'
/// with the radial quadrature split at the diagonal kink.
ModeSet apply_newton_modes(const ModeSet& density, const RadialGrid& rg);

/// Direct product-quadrature potential through the azimuthal kernel. Slow
/// cross-validation path (1e-4..1e-5); the target's radial panel is locally
/// subdivided around the singularity instead of regularizing the kernel.
GridFunction apply_newton_direct(const GridFunction& density);

/// Potential of a mode density at an arbitrary point, on or off grid,
/// including r > R0.
double eval_potential_at(const ModeSet& density, double r, double zeta);

/// (K rho)(0,0) = int rho_0(r') r' dr' -- the origin value subtracted by the
/// nonlinear map.
double potential_origin_value(const ModeSet& density);

}  // namespace rotstar
