// Acceptance suite: every criterion prints one PASS/FAIL line with its
// measured quantities; the binary exits nonzero when any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "rotstar/errors.hpp"
#include "rotstar/perturbation.hpp"
#include "rotstar/snapshot.hpp"
#include "rotstar/surface.hpp"

using namespace rotstar;
using std::numbers::pi;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[%s] criterion %2d: %-34s %s  (%.2fs)\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str(), seconds);
  if (!pass) ++g_failures;
}

void run(int id, const std::string& name,
         const std::function<std::pair<bool, std::string>()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    std::tie(pass, detail) = fn();
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(id, name, pass, detail, dt);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

const DistortedSolution& solved(double eps) {
  static std::map<double, DistortedSolution> cache;
  auto it = cache.find(eps);
  if (it == cache.end()) {
    SolverConfig cfg;
    it = cache.emplace(eps, solve_distorted(cfg, eps)).first;
  }
  return it->second;
}

}  // namespace

int main() {
  // 1. Lane-Emden oracle, nu = 1: xi1 = mu1 = pi, theta = sin(r)/r.
  run(1, "lane-emden nu=1 oracle", [] {
    const auto p = solve_lane_emden(1.0, 1e-10);
    double worst = std::max(std::abs(p.xi1 - pi), std::abs(p.mu1 - pi));
    for (int i = 1; i <= 100; ++i) {
      const double r = pi * i / 100.0;
      worst = std::max(worst, std::abs(eval_theta(p, r) - std::sin(r) / r));
    }
    return std::make_pair(worst < 1e-8, "max dev " + fmt(worst) + " (tol 1e-8)");
  });

  // 2. Lane-Emden oracle, nu = 5: closed form on [0,10], NoFiniteZero raised.
  run(2, "lane-emden nu=5 oracle", [] {
    const auto traj = integrate_theta(5.0, 1e-10, 10.0);
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double r = std::max(traj.t_begin, 10.0 * i / 100.0);
      worst = std::max(worst,
                       std::abs(traj.eval(r)[0] - 1.0 / std::sqrt(1.0 + r * r / 3.0)));
    }
    bool raised = false;
    try {
      solve_lane_emden(5.0, 1e-10);
    } catch (const NoFiniteZero&) {
      raised = true;
    }
    return std::make_pair(worst < 1e-8 && raised,
                          "max dev " + fmt(worst) + (raised ? ", raised" : ", NOT raised"));
  });

  // 3. Kovetz table (quoted): nu in {1,2,2.5,3,4} vs 9.9,1.8,2.3,4.0,3.8
  //    within +-0.1, plus the m(nu) < 6 bound on [2,5) step 0.1.
  run(3, "kovetz table and bound", [] {
    const double nus[] = {1.0, 2.0, 2.5, 3.0, 4.0};
    const double table[] = {9.9, 1.8, 2.3, 4.0, 3.8};
    std::string detail;
    bool table_ok = true;
    for (int i = 0; i < 5; ++i) {
      const double m = kovetz_sup(solve_lane_emden(nus[i], 1e-10)).first;
      const bool ok = std::abs(m - table[i]) <= 0.1;
      table_ok = table_ok && ok;
      detail += (i ? " " : "") + fmt(m) + (ok ? "=" : "!") + fmt(table[i]);
    }
    bool bound_ok = true;
    for (double nu = 2.0; nu < 4.95; nu += 0.1) {
      const double rmax = nu > 4.55 ? 500.0 : 100.0;
      bound_ok = bound_ok && kovetz_sup(solve_lane_emden(nu, 1e-10, rmax)).first < 6.0;
    }
    detail += bound_ok ? "; bound<6 ok" : "; bound FAILED";
    if (!table_ok) {
      detail +=
          "  NOTE: the defining supremum (two independent integrators agree to 1e-6, "
          "and sup 5r^2(1+r^2/3)^-2 = 3.75 exactly at nu=5) is incompatible with the "
          "quoted Kovetz (1968) entries at nu=2, 2.5, 3";
    }
    return std::make_pair(table_ok && bound_ok, detail);
  });

  // 4. Q-identity residual at nu in {2,3,4}.
  run(4, "q-identity residual", [] {
    double worst = 0.0;
    for (double nu : {2.0, 3.0, 4.0})
      worst = std::max(worst, q_identity_residual(solve_lane_emden(nu, 1e-12)));
    return std::make_pair(worst <= 1e-6, "max rel " + fmt(worst) + " (tol 1e-6)");
  });

  // 5. Corollary sweep: boundary functional positive, psi_j monotone.
  run(5, "corollary sweep", [] {
    for (double nu : {2.0, 2.5, 3.0, 4.0, 4.5}) {
      const auto p = solve_lane_emden(nu, 1e-11);
      for (int j : {2, 4, 6}) {
        const auto psi = solve_Ej(p, j, 1e-11);
        if (!(dj_functional(psi) > 0.0))
          return std::make_pair(false,
                                "functional <= 0 at nu=" + fmt(nu) + " j=" + fmt(j));
        double prev = 0.0;
        for (int i = 1; i <= 200; ++i) {
          const double v = psi.value(p.xi1 * i / 200.0);
          if (!(v > prev))
            return std::make_pair(false, "psi not increasing at nu=" + fmt(nu));
          prev = v;
        }
      }
    }
    return std::make_pair(true, std::string("15 cases positive and monotone"));
  });

  // 6. Kernel equivalence: AGM elliptic route vs brute-force trapezoid;
  //    truncated multipole sum at radius ratio <= 0.5.
  run(6, "kernel equivalence", [] {
    std::mt19937 rng(9001);
    std::uniform_real_distribution<double> rad(0.1, 10.0), ang(-0.95, 0.95);
    double worst_beta = 0.0;
    int tested = 0;
    while (tested < 50) {
      const double r = rad(rng), rp = rad(rng), z = ang(rng), zp = ang(rng);
      const auto ke = azimuthal_kernel_eval(r, z, rp, zp);
      if (ke.near_singular) continue;
      double a = r * r + rp * rp - 2 * r * rp * z * zp;
      double b = 2 * r * rp * std::sqrt((1 - z * z) * (1 - zp * zp));
      double sum = 0.0;
      const int n = 100000;
      for (int i = 0; i < n; ++i) sum += 1.0 / std::sqrt(a - b * std::cos(2 * pi * i / n));
      const double ref = sum * 2 * pi / n;
      worst_beta = std::max(worst_beta, std::abs(ke.value - ref) / ref);
      ++tested;
    }
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst_mp = 0.0;
    for (int t = 0; t < 50; ++t) {
      const double rp = 1.0 + 9.0 * uni(rng);
      const double r = rp * (0.05 + 0.45 * uni(rng));
      const double z = -0.9 + 1.8 * uni(rng), zp = -0.9 + 1.8 * uni(rng);
      double sum = 0.0;
      for (int j = 0; j <= 40; ++j)
        sum += (2.0 * j + 1.0) * mode_green(j, r, rp) * legendre_eval(j, z) *
               legendre_eval(j, zp);
      const double ref = azimuthal_kernel(r, z, rp, zp);
      worst_mp = std::max(worst_mp, std::abs(2 * pi * sum - ref) / ref);
    }
    return std::make_pair(worst_beta < 1e-10 && worst_mp < 1e-8,
                          "beta " + fmt(worst_beta) + " (1e-10), multipole " +
                              fmt(worst_mp) + " (1e-8)");
  });

  // 7. Discrete fixed point G(theta) = theta at default grids, decreasing
  //    under refinement.
  run(7, "discrete fixed point of theta", [] {
    const auto p = solve_lane_emden(3.0, 1e-12);
    SolverConfig cfg;
    const auto [rg, ag] = make_grids(cfg, p);
    const auto th = theta_grid(p, rg, ag);
    const double defect = sup_norm(apply_G(th, 3.0) - th);
    SolverConfig coarse;
    coarse.panels_interior = 2;
    coarse.panels_exterior = 1;
    const auto [rgc, agc] = make_grids(coarse, p);
    const auto thc = theta_grid(p, rgc, agc);
    const double coarse_defect = sup_norm(apply_G(thc, 3.0) - thc);
    return std::make_pair(defect <= 5e-5 && coarse_defect > defect,
                          "defect " + fmt(defect) + " (tol 5e-5), coarse " +
                              fmt(coarse_defect));
  });

  // 8. Resolvent cross-check against the radial-ODE construction.
  run(8, "resolvent vs ode construction", [] {
    double worst = 0.0, tail = 0.0;
    for (double nu : {2.5, 3.0, 4.0}) {
      const auto p = solve_lane_emden(nu, 1e-12);
      SolverConfig cfg;
      cfg.nu = nu;
      const auto [rg, ag] = make_grids(cfg, p);
      const auto fact = build_resolvent(p, rg, ag);
      const auto g = sample(rg, ag, g_source);
      const auto hm = project(resolvent_apply(fact, g));
      const auto fh = frak_h(p, rg, ag.jmax, 1e-12);
      for (int i = 0; i < rg.n_interior; ++i) {
        worst = std::max(worst, std::abs(hm.modes(i, 0) - fh.modes(i, 0)));
        worst = std::max(worst, std::abs(hm.modes(i, 1) - fh.modes(i, 1)));
      }
      for (int c = 2; c < hm.modes.cols(); ++c)
        tail = std::max(tail, hm.modes.col(c).cwiseAbs().maxCoeff());
    }
    return std::make_pair(worst <= 1e-5 && tail <= 1e-6,
                          "modes 0,2 dev " + fmt(worst) + " (1e-5); j>=4 " + fmt(tail) +
                              " (1e-6)");
  });

  // 9. Contraction and linear response across eps in {4e-3, 2e-3, 1e-3}.
  run(9, "contraction and linear response", [] {
    double dev_over_eps[3];
    int idx = 0;
    for (double eps : {4e-3, 2e-3, 1e-3}) {
      const auto& sol = solved(eps);
      if (!sol.report.converged)
        return std::make_pair(false, std::string("not converged"));
      for (double r : sol.report.ratios)
        if (!(r < 0.5)) return std::make_pair(false, "ratio " + fmt(r) + " >= 0.5");
      if (!(sol.report.residual <= 1e-8))
        return std::make_pair(false, "residual " + fmt(sol.report.residual));
      const auto th = theta_grid(sol.profile, sol.w.rgrid, sol.w.agrid);
      dev_over_eps[idx++] = sup_norm(Theta_grid(sol) - th) / eps;
    }
    double lo = dev_over_eps[0], hi = dev_over_eps[0];
    for (double v : dev_over_eps) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const double spread = (hi - lo) / lo;
    return std::make_pair(spread <= 0.1,
                          "|Theta-theta|/eps spread " + fmt(spread) + " (tol 0.1)");
  });

  // 10. First-order law: ||(Theta-theta)/eps - h|| halves with eps.
  run(10, "first-order law", [] {
    const auto& w0 = solved(0.0).w;  // discrete (1-DG)^{-1} g
    const double n2 = sup_norm(solved(2e-3).w - w0);
    const double n1 = sup_norm(solved(1e-3).w - w0);
    const double ratio = n1 / n2;
    return std::make_pair(ratio >= 0.4 && ratio <= 0.6,
                          "halving ratio " + fmt(ratio) + " (in [0.4, 0.6])");
  });

  // 11. Surface and physical vacuum at nu=3.
  run(11, "surface and vacuum", [] {
    const auto& sol = solved(5e-4);
    const auto sp = surface_profile(sol, 17);
    const double delta = 1e-3 * sol.profile.xi1;
    const double spherical = -sol.profile.mu1 / (sol.profile.xi1 * sol.profile.xi1);
    double dev_half = 0.0;
    for (int i = 0; i < sp.zeta_samples.size(); ++i) {
      const double z = sp.zeta_samples[i], root = sp.xi1_values[i];
      if (!(eval_Theta(sol, root - delta, z) > 0.0 &&
            eval_Theta(sol, root + delta, z) < 0.0))
        return std::make_pair(false, "root certificate failed at zeta=" + fmt(z));
      if (!(sp.normal_derivs[i] < 0.0 && std::isfinite(sp.normal_derivs[i])))
        return std::make_pair(false, std::string("normal derivative not in (-inf, 0)"));
      dev_half = std::max(dev_half, std::abs(sp.normal_derivs[i] - spherical));
    }
    if (!(sp.sigma > 0.0)) return std::make_pair(false, std::string("sigma <= 0"));

    // deviation from the spherical slope scales like eps (stable constant)
    const auto sp1 = surface_profile(solved(1e-3), 17);
    double dev_full = 0.0;
    for (int i = 0; i < sp1.zeta_samples.size(); ++i)
      dev_full = std::max(dev_full, std::abs(sp1.normal_derivs[i] - spherical));
    const double c_half = dev_half / 5e-4, c_full = dev_full / 1e-3;
    if (!(c_half < 2.0 * c_full))
      return std::make_pair(false, std::string("normal-derivative deviation not O(eps)"));

    const double s1 = sigma_first_order(sol.profile, 1e-12);
    const double rel = std::abs(sp.sigma / 5e-4 - s1) / s1;
    return std::make_pair(rel <= 0.05,
                          "sigma/eps vs sigma1 rel " + fmt(rel) + " (tol 0.05)");
  });

  // 12. Pole regularity: slope proxy strictly decreasing into the pole.
  run(12, "pole regularity", [] {
    const auto& sol = solved(1e-3);
    const double p90 = std::abs(pole_slope(sol, 0.9).first);
    const double p99 = std::abs(pole_slope(sol, 0.99).first);
    const double p999 = std::abs(pole_slope(sol, 0.999).first);
    return std::make_pair(p999 < p99 && p99 < p90,
                          fmt(p90) + " > " + fmt(p99) + " > " + fmt(p999));
  });

  std::printf("%d/12 criteria passed\n", 12 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
