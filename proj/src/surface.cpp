#include "rotstar/surface.hpp"

#include <cmath>
#include <numbers>

#include "rotstar/errors.hpp"
#include "rotstar/numerics.hpp"

namespace rotstar {

double find_xi1(const DistortedSolution& sol, double zeta) {
  if (!(std::abs(zeta) <= 1.0)) throw OutOfDomain("find_xi1: |zeta| must be <= 1");
  const double xi1 = sol.profile.xi1;
  const double r0 = 0.5 * xi1, r1 = 1.5 * xi1;
  auto f = [&](double r) { return eval_Theta(sol, r, zeta); };
  const double f0 = f(r0), f1 = f(r1);
  if (!(f0 > 0.0 && f1 < 0.0))
    throw NoBracket("find_xi1: Theta does not change sign on (xi1/2, 3 xi1/2)");
  const double root = find_root(f, r0, r1, f0, f1, 1e-10 * xi1);
  // uniqueness certificate: Theta is strictly decreasing in r at the root
  if (!(eval_grad_Theta(sol, root, zeta).first < 0.0))
    throw NoBracket("find_xi1: radial slope certificate failed at the root");
  return root;
}

double dxi1_dzeta(const DistortedSolution& sol, double zeta) {
  const double r = find_xi1(sol, zeta);
  const auto [dr, dz] = eval_grad_Theta(sol, r, zeta);
  return -dz / dr;
}

namespace {

double normal_derivative_at(const DistortedSolution& sol, double zeta, double r,
                            double slope) {
  const auto [dr, dz] = eval_grad_Theta(sol, r, zeta);
  const double s2 = (1.0 - zeta * zeta) / (r * r);
  return (dr - s2 * slope * dz) / std::sqrt(1.0 + s2 * slope * slope);
}

}  // namespace

double normal_derivative(const DistortedSolution& sol, double zeta) {
  const double r = find_xi1(sol, zeta);
  const auto [dr, dz] = eval_grad_Theta(sol, r, zeta);
  const double slope = -dz / dr;
  return normal_derivative_at(sol, zeta, r, slope);
}

SurfaceProfile surface_profile(const DistortedSolution& sol, int n_samples) {
  if (n_samples < 3) throw ConfigError("surface_profile: need at least 3 samples");
  SurfaceProfile out;
  out.zeta_samples.resize(n_samples);
  out.xi1_values.resize(n_samples);
  out.dxi1_dzeta.resize(n_samples);
  out.normal_derivs.resize(n_samples);
  for (int i = 0; i < n_samples; ++i)
    out.zeta_samples[i] =
        0.5 * (1.0 - std::cos(std::numbers::pi * i / (n_samples - 1)));
  out.zeta_samples[0] = 0.0;
  out.zeta_samples[n_samples - 1] = 1.0;

  parallel_for(n_samples, [&](int i) {
    const double z = out.zeta_samples[i];
    const double r = find_xi1(sol, z);
    const auto [dr, dz] = eval_grad_Theta(sol, r, z);
    const double slope = -dz / dr;
    out.xi1_values[i] = r;
    out.dxi1_dzeta[i] = slope;
    out.normal_derivs[i] = normal_derivative_at(sol, z, r, slope);
  });
  out.sigma = (out.xi1_values[0] - out.xi1_values[n_samples - 1]) / sol.profile.xi1;
  return out;
}

double oblateness(const SurfaceProfile& profile) {
  const int n = static_cast<int>(profile.zeta_samples.size());
  if (n < 2 || profile.zeta_samples[0] != 0.0 || profile.zeta_samples[n - 1] != 1.0)
    throw OutOfDomain("oblateness: profile must contain the zeta=0 and zeta=1 samples");
  return profile.sigma;
}

std::pair<double, double> pole_slope(const DistortedSolution& sol, double zeta) {
  if (!(zeta >= 0.9 && zeta < 1.0))
    throw OutOfDomain("pole_slope: zeta must lie in [0.9, 1)");
  const double r = find_xi1(sol, zeta);
  const double slope = dxi1_dzeta(sol, zeta);
  const double s = std::sqrt(1.0 - zeta * zeta);
  const double proxy = s * slope;
  const double dZdw = (zeta * s * slope + s * r) / ((1.0 - zeta * zeta) * slope - zeta * r);
  return {proxy, dZdw};
}

}  // namespace rotstar
