#include "rotstar/validate.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "rotstar/errors.hpp"
#include "rotstar/perturbation.hpp"
#include "rotstar/snapshot.hpp"
#include "rotstar/surface.hpp"

namespace rotstar {

namespace {

using std::numbers::pi;

struct Runner {
  std::vector<PropertyResult> results;

  void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
    PropertyResult r;
    r.name = name;
    try {
      auto [pass, detail] = fn();
      r.pass = pass;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

double brute_kernel(double r, double z, double rp, double zp) {
  const double a = r * r + rp * rp - 2 * r * rp * z * zp;
  const double b = 2 * r * rp * std::sqrt((1 - z * z) * (1 - zp * zp));
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += 1.0 / std::sqrt(a - b * std::cos(2 * pi * i / n));
  return sum * 2 * pi / n;
}

}  // namespace

std::vector<PropertyResult> run_validation(const SolverConfig& config, bool quick) {
  config.validate();
  Runner R;

  // ---- Lane-Emden profile family ----
  R.run("lane-emden nu=1 closed form", [&] {
    const auto p = solve_lane_emden(1.0, 1e-10);
    double worst = std::max(std::abs(p.xi1 - pi), std::abs(p.mu1 - pi));
    for (int i = 1; i <= 50; ++i) {
      const double r = pi * i / 50.0;
      worst = std::max(worst, std::abs(eval_theta(p, r) - std::sin(r) / r));
    }
    return std::make_pair(worst < 1e-8, "max dev " + fmt(worst));
  });

  R.run("lane-emden nu=5 closed form and no finite zero", [&] {
    const auto traj = integrate_theta(5.0, 1e-10, 10.0);
    double worst = 0.0;
    for (int i = 0; i <= 50; ++i) {
      const double r = std::max(traj.t_begin, 10.0 * i / 50.0);
      worst = std::max(worst,
                       std::abs(traj.eval(r)[0] - 1.0 / std::sqrt(1.0 + r * r / 3.0)));
    }
    bool thrown = false;
    try {
      solve_lane_emden(5.0, 1e-10);
    } catch (const NoFiniteZero&) {
      thrown = true;
    }
    return std::make_pair(worst < 1e-8 && thrown,
                          "dev " + fmt(worst) + (thrown ? ", raised" : ", NOT raised"));
  });

  R.run("mass identity mu1 = integral of theta^nu r^2", [&] {
    double worst = 0.0;
    for (double nu : {2.0, 3.0, 4.0}) {
      const auto p = solve_lane_emden(nu, 1e-11);
      const double mass = integrate_gl(
          [&](double r) { return pow_sharp(eval_theta(p, r), nu) * r * r; }, 0.0, p.xi1,
          64, 16);
      worst = std::max(worst, std::abs(p.mu1 - mass) / p.mu1);
    }
    return std::make_pair(worst < 1e-10, "max rel " + fmt(worst));
  });

  R.run("first zero exceeds pi; single sign change", [&] {
    for (double nu : {1.5, 2.0, 2.5, 3.0, 4.0, 4.5}) {
      const auto p = solve_lane_emden(nu, 1e-10);
      if (!(p.xi1 > pi)) return std::make_pair(false, "xi1 <= pi at nu=" + fmt(nu));
      int changes = 0;
      double prev = 1.0;
      for (int i = 1; i <= 300; ++i) {
        const double th = eval_theta(p, 1.5 * p.xi1 * i / 300.0);
        if (prev > 0.0 && th <= 0.0) ++changes;
        prev = th;
      }
      if (changes != 1) return std::make_pair(false, std::string("sign changes != 1"));
    }
    return std::make_pair(true, std::string("6 indices"));
  });

  R.run("kovetz bound below 6 on [2,5)", [&] {
    double worst = 0.0;
    for (double nu = 2.0; nu < 4.95; nu += 0.1) {
      const double rmax = nu > 4.55 ? 500.0 : 100.0;
      worst = std::max(worst, kovetz_sup(solve_lane_emden(nu, 1e-10, rmax)).first);
    }
    return std::make_pair(worst < 6.0, "max mbar " + fmt(worst));
  });

  R.run("kovetz maximizer identity f(r1) = 2/(nu-1)", [&] {
    double worst = 0.0;
    for (double nu : {2.0, 3.0, 4.0}) {
      const auto p = solve_lane_emden(nu, 1e-11);
      const double r1 = kovetz_sup(p).second;
      worst = std::max(worst, std::abs(milne_ratio(p, r1) - 2.0 / (nu - 1.0)));
    }
    return std::make_pair(worst < 1e-6, "max dev " + fmt(worst));
  });

  R.run("milne ratio increasing", [&] {
    const auto p = solve_lane_emden(config.nu, config.ode_tol);
    double prev = -1.0;
    for (int i = 0; i < 200; ++i) {
      const double f = milne_ratio(p, 0.99 * p.xi1 * i / 199.0);
      if (f <= prev) return std::make_pair(false, "not increasing at i=" + std::to_string(i));
      prev = f;
    }
    return std::make_pair(true, std::string("200 nodes"));
  });

  R.run("q-identity residual", [&] {
    double worst = 0.0;
    for (double nu : {2.0, 3.0, 4.0})
      worst = std::max(worst, q_identity_residual(solve_lane_emden(nu, 1e-12)));
    return std::make_pair(worst < 1e-6, "max rel " + fmt(worst));
  });

  R.run("harmonic extension beyond xi1", [&] {
    const auto p = solve_lane_emden(config.nu, config.ode_tol);
    double worst = 0.0;
    for (double r : {1.2 * p.xi1, 1.5 * p.xi1, 1.9 * p.xi1}) {
      const double h = 1e-4;
      const double lap = (eval_theta(p, r + h) - 2 * eval_theta(p, r) +
                          eval_theta(p, r - h)) / (h * h) +
                         (eval_theta(p, r + h) - eval_theta(p, r - h)) / (h * r);
      worst = std::max(worst, std::abs(lap));
    }
    return std::make_pair(worst < 1e-6, "max |lap| " + fmt(worst));
  });

  // shared objects for the discretized properties
  const auto prof = solve_lane_emden(config.nu, config.ode_tol);
  const auto [rg, ag] = make_grids(config, prof);

  R.run("quadrature weight sums", [&] {
    const double wr = std::abs(rg.weights.sum() - rg.R0) / rg.R0;
    const double wz = std::abs(ag.zeta_weights.sum() - 2.0);
    return std::make_pair(wr < 1e-12 && wz < 1e-12, fmt(wr) + ", " + fmt(wz));
  });

  R.run("angular rule integrates P4^2 to 2/9", [&] {
    double s = 0.0;
    for (int k = 0; k < ag.zeta_nodes.size(); ++k) {
      const double P4 = legendre_eval(4, ag.zeta_nodes[k]);
      s += ag.zeta_weights[k] * P4 * P4;
    }
    return std::make_pair(std::abs(s - 2.0 / 9.0) < 1e-12, fmt(std::abs(s - 2.0 / 9.0)));
  });

  R.run("legendre anchor values", [&] {
    const bool ok = legendre_eval(0, 0.3) == 1.0 &&
                    std::abs(legendre_eval(2, 0.0) + 0.5) < 1e-15 &&
                    std::abs(legendre_eval(4, 1.0) - 1.0) < 1e-14;
    return std::make_pair(ok, std::string("P0, P2(0), P4(1)"));
  });

  R.run("centrifugal source has modes r^2/6 and -r^2/6", [&] {
    const auto m = project(sample(rg, ag, g_source));
    double worst = 0.0;
    for (int i = 0; i < rg.nodes.size(); ++i) {
      const double r2 = rg.nodes[i] * rg.nodes[i];
      worst = std::max(worst, std::abs(m.modes(i, 0) - r2 / 6.0));
      worst = std::max(worst, std::abs(m.modes(i, 1) + r2 / 6.0));
      for (int c = 2; c < m.modes.cols(); ++c)
        worst = std::max(worst, std::abs(m.modes(i, c)));
    }
    const auto back = synthesize(m, ag);
    const auto g = sample(rg, ag, g_source);
    worst = std::max(worst, sup_norm(back - g));
    return std::make_pair(worst < 1e-10, "max dev " + fmt(worst));
  });

  R.run("parseval identity", [&] {
    const auto f = sample(rg, ag, [](double r, double z) {
      return std::exp(-0.05 * r * r) * (1.0 + 0.3 * z * z);
    });
    const auto m = project(f);
    const int i = static_cast<int>(rg.nodes.size()) / 3;
    double lhs = 0.0;
    for (int k = 0; k < ag.zeta_nodes.size(); ++k)
      lhs += ag.zeta_weights[k] * f.values(i, k) * f.values(i, k);
    double rhs = 0.0;
    for (int c = 0; c < m.modes.cols(); ++c)
      rhs += m.modes(i, c) * m.modes(i, c) * 2.0 / (4.0 * c + 1.0);
    return std::make_pair(std::abs(lhs - rhs) < 1e-10 * lhs, fmt(std::abs(lhs - rhs)));
  });

  R.run("kernel symmetry and axis limit", [&] {
    const double k1 = azimuthal_kernel(1.2, 0.4, 2.8, -0.6);
    const double k2 = azimuthal_kernel(2.8, -0.6, 1.2, 0.4);
    const double axis = std::abs(azimuthal_kernel(0.0, 0.0, 2.5, 0.3) - 2 * pi / 2.5);
    return std::make_pair(std::abs(k1 - k2) < 1e-14 && axis < 1e-13,
                          fmt(std::abs(k1 - k2)) + ", " + fmt(axis));
  });

  R.run("kernel matches brute-force quadrature", [&] {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> rad(0.1, 10.0), angd(-0.95, 0.95);
    double worst = 0.0;
    int tested = 0;
    while (tested < 10) {
      const double r = rad(rng), rp = rad(rng), z = angd(rng), zp = angd(rng);
      const auto ke = azimuthal_kernel_eval(r, z, rp, zp);
      if (ke.near_singular) continue;
      worst = std::max(worst,
                       std::abs(ke.value - brute_kernel(r, z, rp, zp)) / ke.value);
      ++tested;
    }
    return std::make_pair(worst < 1e-10, "max rel " + fmt(worst));
  });

  R.run("multipole truncation at radius ratio 1/2", [&] {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const double rp = 1.0 + 9.0 * uni(rng);
      const double r = rp * (0.05 + 0.45 * uni(rng));
      const double z = -0.9 + 1.8 * uni(rng), zp = -0.9 + 1.8 * uni(rng);
      double sum = 0.0;
      for (int j = 0; j <= 40; ++j)
        sum += (2.0 * j + 1.0) * mode_green(j, r, rp) * legendre_eval(j, z) *
               legendre_eval(j, zp);
      const double ref = azimuthal_kernel(r, z, rp, zp);
      worst = std::max(worst, std::abs(2 * pi * sum - ref) / ref);
    }
    return std::make_pair(worst < 1e-8, "max rel " + fmt(worst));
  });

  R.run("shell theorem and far-field decay", [&] {
    ModeSet rho{rg, Eigen::MatrixXd::Zero(rg.nodes.size(), ag.n_modes()), ag.jmax};
    for (int i = 0; i < rg.n_interior; ++i) rho.modes(i, 0) = 1.0;
    const auto pot = apply_newton_modes(rho, rg);
    const double a = rg.xi1;
    double worst = 0.0;
    for (int i = 0; i < rg.nodes.size(); ++i) {
      const double r = rg.nodes[i];
      const double expected = r >= a ? a * a * a / (3.0 * r) : (a * a - r * r / 3.0) / 2.0;
      worst = std::max(worst, std::abs(pot.modes(i, 0) - expected));
    }
    const double far = 10.0 * rg.R0;
    const double decay =
        std::abs(far * eval_potential_at(rho, far, 0.1) - a * a * a / 3.0);
    return std::make_pair(worst < 1e-10 && decay < 1e-8,
                          "shell " + fmt(worst) + ", decay " + fmt(decay));
  });

  R.run("mode-j potential decays as r^(-j-1) beyond support", [&] {
    ModeSet rho{rg, Eigen::MatrixXd::Zero(rg.nodes.size(), ag.n_modes()), ag.jmax};
    for (int i = 0; i < rg.n_interior; ++i)
      rho.modes(i, 1) = pow_sharp(eval_theta(prof, rg.nodes[i]), prof.nu);
    auto mode2_at = [&](double r) {
      return integrate_against(
          rg, r, [r](double rp) { return mode_green(2, r, rp) * rp * rp; },
          Eigen::VectorXd(rho.modes.col(1)));
    };
    const double r1 = 1.2 * rg.xi1, r2 = 1.8 * rg.xi1;
    const double dev =
        std::abs(mode2_at(r1) / mode2_at(r2) - std::pow(r2 / r1, 3.0));
    return std::make_pair(dev < 1e-8 * std::pow(r2 / r1, 3.0), "rel dev " + fmt(dev));
  });

  if (!quick) {
    R.run("direct kernel path cross-validates the multipole path", [&] {
      SolverConfig small = config;
      small.panels_interior = std::min(config.panels_interior, 4);
      small.panels_exterior = std::min(config.panels_exterior, 2);
      small.nodes_per_panel = std::min(config.nodes_per_panel, 10);
      small.angular_order = std::min(config.angular_order, 16);
      small.jmax = std::min(config.jmax, 6);
      const auto [rgs, ags] = make_grids(small, prof);
      const auto dens = sample(rgs, ags, [&](double r, double) {
        return pow_sharp(eval_theta(prof, r), prof.nu);
      });
      const auto direct = apply_newton_direct(dens);
      const auto modal = synthesize(apply_newton_modes(project(dens), rgs), ags);
      const double dev = sup_norm(direct - modal);
      return std::make_pair(dev < 1e-5, "sup dev " + fmt(dev));
    });
  }

  // ---- linearized operator ----
  const auto th = theta_grid(prof, rg, ag);
  const auto G_theta = apply_G(th, config.nu);
  const double defect = sup_norm(G_theta - th);

  R.run("discrete fixed point G(theta) = theta", [&] {
    return std::make_pair(defect < 1e-10, "defect " + fmt(defect));
  });

  R.run("defect decreases under refinement", [&] {
    SolverConfig coarse = config;
    coarse.panels_interior = std::max(1, config.panels_interior / 4);
    coarse.panels_exterior = std::max(1, config.panels_exterior / 4);
    if (coarse.panels_interior == config.panels_interior) {
      coarse.panels_interior = 2 * config.panels_interior;
      coarse.panels_exterior = 2 * config.panels_exterior;
      // when already at the minimum, compare against the refined grid instead
      const auto [rgr, agr] = make_grids(coarse, prof);
      const auto thr = theta_grid(prof, rgr, agr);
      const double refined = sup_norm(apply_G(thr, config.nu) - thr);
      return std::make_pair(refined < defect,
                            fmt(defect) + " -> " + fmt(refined) + " (refined)");
    }
    const auto [rgc, agc] = make_grids(coarse, prof);
    const auto thc = theta_grid(prof, rgc, agc);
    const double coarse_defect = sup_norm(apply_G(thc, config.nu) - thc);
    return std::make_pair(coarse_defect > defect,
                          fmt(coarse_defect) + " -> " + fmt(defect));
  });

  R.run("frechet derivative against finite differences", [&] {
    auto h = sample(rg, ag, [&](double r, double z) {
      return std::exp(-(r * r) / (rg.xi1 * rg.xi1)) * (0.6 + 0.4 * legendre_eval(2, z));
    });
    h = (1.0 / sup_norm(h)) * h;
    const auto dgh = apply_DG_theta(prof, h);
    double err[2];
    const double ts[2] = {1e-2, 1e-3};
    for (int m = 0; m < 2; ++m)
      err[m] = sup_norm((1.0 / ts[m]) * (apply_G(th + ts[m] * h, config.nu) - G_theta) - dgh);
    const double ratio = err[0] / err[1];
    return std::make_pair(err[1] < err[0] && ratio > 5.0 && ratio < 20.0,
                          "errors " + fmt(err[0]) + ", " + fmt(err[1]));
  });

  R.run("remainder shrinks quadratically", [&] {
    auto h = sample(rg, ag, [&](double r, double z) {
      return std::exp(-(r * r) / (rg.xi1 * rg.xi1)) * (0.6 + 0.4 * legendre_eval(2, z));
    });
    h = (0.1 / sup_norm(h)) * h;
    const double w1 = sup_norm(omega(prof, h));
    const double w2 = sup_norm(omega(prof, 0.5 * h));
    return std::make_pair(w2 <= 0.35 * w1, "ratio " + fmt(w2 / w1));
  });

  const auto fact = build_resolvent(prof, rg, ag);
  const auto gsrc = sample(rg, ag, g_source);
  const auto resolved_g = resolvent_apply(fact, gsrc);

  R.run("resolvent factorization conditioning", [&] {
    double worst = 0.0;
    for (double c : fact.condition) worst = std::max(worst, c);
    return std::make_pair(std::isfinite(worst) && worst < 1e8, "max cond " + fmt(worst));
  });

  R.run("resolvent round trip", [&] {
    const double dev = sup_norm(gsrc - (resolved_g - dg_apply(fact, resolved_g)));
    return std::make_pair(dev < 1e-9, "sup dev " + fmt(dev));
  });

  R.run("resolvent matches the radial-ODE construction", [&] {
    const auto fh = frak_h(prof, rg, ag.jmax, config.ode_tol);
    const auto hm = project(resolved_g);
    double worst = 0.0, tail = 0.0;
    for (int i = 0; i < rg.n_interior; ++i) {
      worst = std::max(worst, std::abs(hm.modes(i, 0) - fh.modes(i, 0)));
      worst = std::max(worst, std::abs(hm.modes(i, 1) - fh.modes(i, 1)));
    }
    for (int c = 2; c < hm.modes.cols(); ++c)
      tail = std::max(tail, hm.modes.col(c).cwiseAbs().maxCoeff());
    return std::make_pair(worst < 1e-5 && tail < 1e-6,
                          "modes " + fmt(worst) + ", tail " + fmt(tail));
  });

  R.run("boundary functional positive (corollary sweep)", [&] {
    for (double nu : {2.0, 2.5, 3.0, 4.0, 4.5}) {
      const auto p = solve_lane_emden(nu, 1e-11);
      const double mbar = kovetz_sup(p).first;
      for (int j : {2, 4, 6}) {
        const auto psi = solve_Ej(p, j, 1e-11);
        const double dj = dj_functional(psi);
        if (!(dj > 0.0))
          return std::make_pair(false, "dj <= 0 at nu=" + fmt(nu) + " j=" + std::to_string(j));
        if (mbar < j * (j + 1.0) && !(dj > 0.0))
          return std::make_pair(false, std::string("energy-argument implication violated"));
      }
    }
    return std::make_pair(true, std::string("15 cases"));
  });

  R.run("mode-2 solution positive and monotone", [&] {
    const auto psi2 = solve_Ej(prof, 2, config.ode_tol);
    double prev = 0.0;
    for (int i = 1; i <= 200; ++i) {
      const double v = psi2.value(prof.xi1 * i / 200.0);
      if (!(v > prev)) return std::make_pair(false, std::string("not increasing"));
      prev = v;
    }
    return std::make_pair(true, std::string("monotone"));
  });

  R.run("mode-0 response vanishes at the origin", [&] {
    const auto h0 = solve_h0(prof, config.ode_tol);
    const double v0 = h0.value(0.0);
    const double near = std::abs(h0.value(1e-2) - 1e-4 / 6.0);
    return std::make_pair(v0 == 0.0 && near < 1e-6, "h0(0)=" + fmt(v0));
  });

  R.run("exterior matching: A2 < 0, residuals small, sigma1 > 0", [&] {
    for (double nu : {2.0, 3.0, 4.0}) {
      const auto p = solve_lane_emden(nu, 1e-12);
      const auto a2 = coeff_A2(p);
      if (!(a2.A2 < 0.0)) return std::make_pair(false, "A2 >= 0 at nu=" + fmt(nu));
      if (a2.match_residual_value > 1e-8 || a2.match_residual_deriv > 1e-8)
        return std::make_pair(false, std::string("matching residual too large"));
      if (!(sigma_first_order(p) > 0.0))
        return std::make_pair(false, "sigma1 <= 0 at nu=" + fmt(nu));
    }
    return std::make_pair(true, std::string("nu in {2,3,4}"));
  });

  // ---- full solves ----
  R.run("eps=0 solve returns the first-order response", [&] {
    const auto sol = solve_distorted(config, 0.0);
    const double dw = sup_norm(sol.w - resolved_g);
    const double dtheta = sup_norm(Theta_grid(sol) - th);
    return std::make_pair(sol.report.converged && sol.report.iterations == 1 &&
                              dw < 1e-12 && dtheta == 0.0,
                          "dw " + fmt(dw));
  });

  R.run("contraction run at eps=1e-3", [&] {
    const auto sol = solve_distorted(config, 1e-3);
    bool ratios_ok = true;
    for (double r : sol.report.ratios) ratios_ok = ratios_ok && r < 0.5;
    const double center = std::abs(eval_Theta(sol, 0.0, 0.3) - 1.0);
    return std::make_pair(sol.report.converged && ratios_ok &&
                              sol.report.residual < 1e-8 && center < config.fp_tol,
                          "residual " + fmt(sol.report.residual));
  });

  R.run("linear response across the eps sweep", [&] {
    const auto s2 = solve_distorted(config, 2e-3);
    const auto s1 = solve_distorted(config, 1e-3);
    const double c2 = sup_norm(Theta_grid(s2) - th) / 2e-3;
    const double c1 = sup_norm(Theta_grid(s1) - th) / 1e-3;
    const double drift = std::abs(c2 - c1) / c1;
    const double n2 = sup_norm(s2.w - resolved_g);
    const double n1 = sup_norm(s1.w - resolved_g);
    const double ratio = n1 / n2;
    return std::make_pair(drift < 0.1 && ratio > 0.4 && ratio < 0.6,
                          "drift " + fmt(drift) + ", first-order ratio " + fmt(ratio));
  });

  R.run("surface roots, vacuum condition, oblateness", [&] {
    const auto sol = solve_distorted(config, 5e-4);
    const auto sp = surface_profile(sol, 9);
    const double delta = 1e-3 * sol.profile.xi1;
    for (int i = 0; i < sp.zeta_samples.size(); ++i) {
      const double z = sp.zeta_samples[i], root = sp.xi1_values[i];
      if (!(eval_Theta(sol, root - delta, z) > 0.0 &&
            eval_Theta(sol, root + delta, z) < 0.0))
        return std::make_pair(false, std::string("root certificate failed"));
      if (!(sp.normal_derivs[i] < 0.0 && std::isfinite(sp.normal_derivs[i])))
        return std::make_pair(false, std::string("normal derivative not negative/finite"));
    }
    if (!(sp.sigma > 0.0)) return std::make_pair(false, std::string("sigma <= 0"));
    const double s1 = sigma_first_order(sol.profile, config.ode_tol);
    const double rel = std::abs(sp.sigma / 5e-4 - s1) / s1;
    return std::make_pair(rel < 0.05, "sigma/eps vs sigma1: rel " + fmt(rel));
  });

  R.run("pole slope decays toward the pole", [&] {
    const auto sol = solve_distorted(config, 1e-3);
    const double p90 = std::abs(pole_slope(sol, 0.9).first);
    const double p99 = std::abs(pole_slope(sol, 0.99).first);
    const double p999 = std::abs(pole_slope(sol, 0.999).first);
    return std::make_pair(p999 < p99 && p99 < p90,
                          fmt(p90) + " > " + fmt(p99) + " > " + fmt(p999));
  });

  R.run("snapshot round trip is byte-identical", [&] {
    const auto sol = solve_distorted(config, 1e-3);
    const auto snap = make_snapshot(sol, config);
    const std::string a = serialize_snapshot(snap);
    const std::string b = serialize_snapshot(parse_snapshot(a));
    const auto restored = restore_solution(parse_snapshot(a));
    const double dres = std::abs(residual(restored) - sol.report.residual);
    return std::make_pair(a == b && dres < 1e-12,
                          a == b ? "identical, residual dev " + fmt(dres)
                                 : "serialization differs");
  });

  return R.results;
}

}  // namespace rotstar
