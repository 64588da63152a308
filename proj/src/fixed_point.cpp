#include "rotstar/fixed_point.hpp"

#include <cmath>

#include "rotstar/errors.hpp"

namespace rotstar {

double g_source(double r, double zeta) {
  return 0.25 * (1.0 - zeta * zeta) * r * r;
}

DistortedSolution solve_distorted(const SolverConfig& config, double eps) {
  config.validate();
  if (!(eps >= 0.0)) throw ConfigError("solve_distorted: eps must be >= 0");

  DistortedSolution sol;
  sol.nu = config.nu;
  sol.eps = eps;
  sol.profile = solve_lane_emden(config.nu, config.ode_tol);
  const auto [rg, ag] = make_grids(config, sol.profile);
  const auto fact = build_resolvent(sol.profile, rg, ag);

  const GridFunction g = sample(rg, ag, g_source);
  const GridFunction th = theta_grid(sol.profile, rg, ag);
  const GridFunction G_theta = apply_G(th, config.nu);

  // w^(1) = (1-DG)^{-1} g, since omega(0) = 0
  GridFunction w = resolvent_apply(fact, g);
  sol.report.diffs.push_back(sup_norm(w));
  sol.report.iterations = 1;

  if (eps > 0.0) {
    int bad_ratio_streak = 0;
    for (int n = 1; n < config.max_iter; ++n) {
      // omega(eps w) = G(theta + eps w) - G(theta) - DG(eps w), definitionally
      const GridFunction omega_w =
          apply_G(th + eps * w, config.nu) - G_theta - dg_apply(fact, eps * w);
      const GridFunction w_next = resolvent_apply(fact, g + (1.0 / eps) * omega_w);
      const double d = sup_norm(w_next - w);
      w = w_next;
      sol.report.iterations = n + 1;
      const double ratio = d / sol.report.diffs.back();
      sol.report.diffs.push_back(d);
      sol.report.ratios.push_back(ratio);
      if (!std::isfinite(d))
        throw NotContracting("solve_distorted: iteration diverged (eps too large)");
      if (d <= config.fp_tol) {
        sol.report.converged = true;
        break;
      }
      bad_ratio_streak = ratio >= 1.0 ? bad_ratio_streak + 1 : 0;
      if (bad_ratio_streak >= 2)
        throw NotContracting(
            "solve_distorted: two consecutive non-contracting steps (eps beyond "
            "the convergent range)");
    }
    if (!sol.report.converged)
      throw MaxIterExceeded("solve_distorted: no convergence within max_iter");
  } else {
    // the eps -> 0 limit: omega(eps w)/eps -> 0, one application suffices
    sol.report.converged = true;
  }

  sol.w = w;
  const GridFunction Theta = eps == 0.0 ? th : th + eps * w;
  sol.theta_modes = project(pow_sharp(positive_part(Theta), config.nu));
  sol.origin_potential = potential_origin_value(sol.theta_modes);
  sol.report.residual = residual(sol);
  return sol;
}

GridFunction Theta_grid(const DistortedSolution& sol) {
  const GridFunction th = theta_grid(sol.profile, sol.w.rgrid, sol.w.agrid);
  if (sol.eps == 0.0) return th;
  return th + sol.eps * sol.w;
}

double residual(const DistortedSolution& sol) {
  const GridFunction Theta = Theta_grid(sol);
  const GridFunction g = sample(sol.w.rgrid, sol.w.agrid, g_source);
  return sup_norm(Theta - sol.eps * g - apply_G(Theta, sol.nu));
}

double eval_Theta(const DistortedSolution& sol, double r, double zeta) {
  return sol.eps * g_source(r, zeta) + 1.0 + eval_potential_at(sol.theta_modes, r, zeta) -
         sol.origin_potential;
}

std::pair<double, double> eval_grad_Theta(const DistortedSolution& sol, double r,
                                          double zeta) {
  if (!(r > 0.0)) throw OutOfDomain("eval_grad_Theta requires r > 0");
  double dr = sol.eps * 0.5 * (1.0 - zeta * zeta) * r;
  double dz = -sol.eps * 0.5 * zeta * r * r;
  const RadialGrid& rg = sol.theta_modes.rgrid;
  for (int c = 0; c < sol.theta_modes.modes.cols(); ++c) {
    const int j = 2 * c;
    const Eigen::VectorXd rho = sol.theta_modes.modes.col(c);
    const double Ij = integrate_against(
        rg, r, [j, r](double rp) { return mode_green(j, r, rp) * rp * rp; }, rho);
    const double dIj = integrate_against(
        rg, r, [j, r](double rp) { return mode_green_dr(j, r, rp) * rp * rp; }, rho);
    dr += dIj * legendre_eval(j, zeta);
    dz += Ij * legendre_deriv(j, zeta);
  }
  return {dr, dz};
}

}  // namespace rotstar
