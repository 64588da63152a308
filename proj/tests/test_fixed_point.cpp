#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rotstar/errors.hpp"
#include "rotstar/fixed_point.hpp"

using namespace rotstar;

TEST_CASE("centrifugal source") {
  CHECK(g_source(3.7, 1.0) == 0.0);
  CHECK(g_source(3.7, -1.0) == 0.0);
  CHECK(g_source(2.0, 0.0) == 1.0);

  const auto p = solve_lane_emden(3.0, 1e-12);
  SolverConfig cfg;
  const auto [rg, ag] = make_grids(cfg, p);
  const auto m = project(sample(rg, ag, g_source));
  for (int i : {0, 50, 150}) {
    const double r2 = rg.nodes[i] * rg.nodes[i];
    CHECK(m.modes(i, 0) == doctest::Approx(r2 / 6.0).epsilon(1e-13));
    CHECK(m.modes(i, 1) == doctest::Approx(-r2 / 6.0).epsilon(1e-13));
  }
}

TEST_CASE("eps = 0 converges in one step to the first-order response") {
  SolverConfig cfg;
  const auto sol = solve_distorted(cfg, 0.0);
  CHECK(sol.report.converged);
  CHECK(sol.report.iterations == 1);

  // w is the resolvent applied to the source
  const auto fact = build_resolvent(sol.profile, sol.w.rgrid, sol.w.agrid);
  const auto g = sample(sol.w.rgrid, sol.w.agrid, g_source);
  CHECK(sup_norm(sol.w - resolvent_apply(fact, g)) < 1e-12);

  // Theta = theta exactly, and the residual is the discrete theta-defect
  const auto th = theta_grid(sol.profile, sol.w.rgrid, sol.w.agrid);
  CHECK(sup_norm(Theta_grid(sol) - th) == 0.0);
  const double defect = sup_norm(apply_G(th, sol.nu) - th);
  CHECK(sol.report.residual == doctest::Approx(defect).epsilon(1e-10));
}

TEST_CASE("converged solve at nu=3, eps=1e-3") {
  SolverConfig cfg;
  const auto sol = solve_distorted(cfg, 1e-3);
  CHECK(sol.report.converged);
  CHECK(sol.report.residual < 10 * cfg.fp_tol);
  // contraction ratios below 0.1 from the second iteration on
  for (size_t n = 1; n < sol.report.ratios.size(); ++n)
    CHECK(sol.report.ratios[n] < 0.1);

  SUBCASE("central value and equatorial symmetry") {
    CHECK(eval_Theta(sol, 0.0, 0.3) == doctest::Approx(1.0).epsilon(cfg.fp_tol));
    const auto T = Theta_grid(sol);
    const int nz = static_cast<int>(T.agrid.zeta_nodes.size());
    for (int k = 0; k < nz / 2; ++k)
      CHECK((T.values.col(k) - T.values.col(nz - 1 - k)).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("membership in the even function space at the smallest radius") {
    // u(0, zeta) = u(0, 0): the zeta spread at the innermost node is O(r^2)
    const auto T = Theta_grid(sol);
    const double spreadT = T.values.row(0).maxCoeff() - T.values.row(0).minCoeff();
    const double spreadW =
        sol.w.values.row(0).maxCoeff() - sol.w.values.row(0).minCoeff();
    CHECK(spreadT < 1e-6);
    CHECK(spreadW < 1e-3);
  }
  SUBCASE("grid-node evaluation matches theta + eps*w") {
    const auto T = Theta_grid(sol);
    double worst = 0.0;
    for (int i = 0; i < T.rgrid.nodes.size(); i += 13)
      for (int k = 0; k < T.agrid.zeta_nodes.size(); k += 5)
        worst = std::max(worst, std::abs(eval_Theta(sol, T.rgrid.nodes[i],
                                                    T.agrid.zeta_nodes[k]) -
                                         T.values(i, k)));
    CHECK(worst < 1e-9);
  }
  SUBCASE("perturbing w away from the fixed point raises the residual") {
    DistortedSolution bad = sol;
    bad.w.values.array() += 0.1;
    const GridFunction Theta = theta_grid(bad.profile, bad.w.rgrid, bad.w.agrid) +
                               bad.eps * bad.w;
    bad.theta_modes = project(pow_sharp(positive_part(Theta), bad.nu));
    bad.origin_potential = potential_origin_value(bad.theta_modes);
    CHECK(residual(bad) > 100.0 * sol.report.residual);
  }
}

TEST_CASE("eps sweep: |Theta - theta| scales linearly") {
  SolverConfig cfg;
  double ratio[3];
  int idx = 0;
  for (double eps : {4e-3, 2e-3, 1e-3}) {
    const auto sol = solve_distorted(cfg, eps);
    CHECK(sol.report.converged);
    for (double r : sol.report.ratios) CHECK(r < 0.5);
    CHECK(sol.report.residual < 1e-8);
    const auto th = theta_grid(sol.profile, sol.w.rgrid, sol.w.agrid);
    ratio[idx++] = sup_norm(Theta_grid(sol) - th) / eps;
  }
  for (int m = 1; m < 3; ++m) {
    CHECK(std::abs(ratio[m] - ratio[0]) / ratio[0] < 0.1);
  }
}

TEST_CASE("first-order law: w approaches the resolvent response like eps") {
  SolverConfig cfg;
  const auto w0 = solve_distorted(cfg, 0.0).w;
  const auto w_2 = solve_distorted(cfg, 2e-3).w;
  const auto w_1 = solve_distorted(cfg, 1e-3).w;
  const double n2 = sup_norm(w_2 - w0);
  const double n1 = sup_norm(w_1 - w0);
  CHECK(n1 / n2 > 0.4);
  CHECK(n1 / n2 < 0.6);
}

TEST_CASE("failure modes") {
  SolverConfig cfg;
  CHECK_THROWS_AS(solve_distorted(cfg, 0.5), NotContracting);
  SolverConfig tiny = cfg;
  tiny.max_iter = 2;
  CHECK_THROWS_AS(solve_distorted(tiny, 1e-3), MaxIterExceeded);
  SolverConfig bad = cfg;
  bad.r0_factor = 1.5;
  CHECK_THROWS_AS(solve_distorted(bad, 1e-3), ConfigError);
  CHECK_THROWS_AS(solve_distorted(cfg, -1.0), ConfigError);
}

TEST_CASE("spherical reduction of the off-grid evaluation at eps=0") {
  SolverConfig cfg;
  const auto sol = solve_distorted(cfg, 0.0);
  const auto& p = sol.profile;
  for (double r : {0.013, 0.7, 2.3, 5.9, p.xi1, 1.3 * p.xi1, 2.7 * p.xi1, 4.0 * p.xi1}) {
    CHECK(std::abs(eval_Theta(sol, r, 0.42) - eval_theta(p, r)) < 1e-5);
  }
}

TEST_CASE("gradient of Theta") {
  SolverConfig cfg;
  const auto sol = solve_distorted(cfg, 1e-3);
  const auto& p = sol.profile;

  SUBCASE("zeta derivative vanishes on the equator") {
    for (double r : {1.0, 3.0, 6.0}) {
      CHECK(std::abs(eval_grad_Theta(sol, r, 0.0).second) < 1e-13);
    }
  }
  SUBCASE("finite differences at random interior points") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> rad(0.2, 1.9 * p.xi1), ang(-0.95, 0.95);
    for (int t = 0; t < 20; ++t) {
      const double r = rad(rng), z = ang(rng);
      const auto [dr, dz] = eval_grad_Theta(sol, r, z);
      const double fdr = oracle::fd_derivative(
          [&](double x) { return eval_Theta(sol, x, z); }, r, 1e-5);
      const double fdz = oracle::fd_derivative(
          [&](double x) { return eval_Theta(sol, r, x); }, z, 1e-5);
      CHECK(dr == doctest::Approx(fdr).epsilon(1e-6));
      CHECK(std::abs(dz - fdz) < 1e-6 * std::max(1.0, std::abs(dz)));
    }
  }
  SUBCASE("radial derivative deviation from dtheta is O(eps)") {
    const auto sol_half = solve_distorted(cfg, 5e-4);
    auto dev = [&](const DistortedSolution& s) {
      double worst = 0.0;
      for (double r : {0.5, 2.0, 4.0, 6.0, 1.1 * p.xi1, 1.6 * p.xi1})
        for (double z : {0.0, 0.6, 0.95})
          worst = std::max(worst, std::abs(eval_grad_Theta(s, r, z).first -
                                           eval_dtheta(s.profile, r)));
      return worst;
    };
    const double c1 = dev(sol) / 1e-3;
    const double c2 = dev(sol_half) / 5e-4;
    CHECK(std::abs(c2 - c1) / c1 < 0.5);  // stable constant across halving
  }
}
