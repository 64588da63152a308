#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rotstar/errors.hpp"
#include "rotstar/grid.hpp"

using namespace rotstar;

namespace {
LaneEmdenProfile profile3() {
  static LaneEmdenProfile p = solve_lane_emden(3.0, 1e-12);
  return p;
}
double g_centrifugal(double r, double zeta) { return 0.25 * (1.0 - zeta * zeta) * r * r; }
}  // namespace

TEST_CASE("radial grid: node count, weight sum, xi1 panel break") {
  const auto p = profile3();
  const auto g = make_radial_grid(p.xi1, 2 * p.xi1, 2, 2, 16);
  CHECK(g.nodes.size() == 64);
  CHECK(std::abs(g.weights.sum() - 2 * p.xi1) < 1e-12 * 2 * p.xi1);
  CHECK(std::count(g.panel_breaks.begin(), g.panel_breaks.end(), p.xi1) == 1);
  CHECK(g.n_interior == 32);
  for (int i = 1; i < g.nodes.size(); ++i) CHECK(g.nodes[i] > g.nodes[i - 1]);
  CHECK(g.nodes[0] > 0.0);
  CHECK(g.nodes[g.nodes.size() - 1] < g.R0);
  CHECK_THROWS_AS(make_radial_grid(p.xi1, 2 * p.xi1, 0, 1, 16), ConfigError);
}

TEST_CASE("angular grid: symmetry, weight sum, quadrature exactness") {
  const auto ag = make_angular_grid(32, 8);
  CHECK(std::abs(ag.zeta_weights.sum() - 2.0) < 1e-12);
  const int nz = static_cast<int>(ag.zeta_nodes.size());
  for (int k = 0; k < nz / 2; ++k) {
    CHECK(ag.zeta_nodes[k] == -ag.zeta_nodes[nz - 1 - k]);  // exact mirror
    CHECK(ag.zeta_weights[k] == ag.zeta_weights[nz - 1 - k]);
  }
  // integrates P_4^2 to 2/9, and polynomials of degree <= 63 generally
  double p4sq = 0.0, p9 = 0.0;
  for (int k = 0; k < nz; ++k) {
    const double P4 = legendre_eval(4, ag.zeta_nodes[k]);
    p4sq += ag.zeta_weights[k] * P4 * P4;
    p9 += ag.zeta_weights[k] * std::pow(ag.zeta_nodes[k], 9);
  }
  CHECK(std::abs(p4sq - 2.0 / 9.0) < 1e-12);
  CHECK(std::abs(p9) < 1e-14);
}

TEST_CASE("legendre evaluation and derivative") {
  CHECK(legendre_eval(0, 0.37) == 1.0);
  CHECK(legendre_eval(2, 0.0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(legendre_eval(4, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(legendre_eval(2, 0.7) == doctest::Approx(0.5 * (3 * 0.49 - 1)).epsilon(1e-15));
  // derivative against finite differences
  for (int j : {1, 2, 4, 7}) {
    for (double z : {-0.9, -0.3, 0.0, 0.5, 0.95}) {
      const double fd =
          oracle::fd_derivative([j](double x) { return legendre_eval(j, x); }, z, 1e-6);
      CHECK(legendre_deriv(j, z) == doctest::Approx(fd).epsilon(1e-7));
    }
  }
  CHECK(legendre_deriv(4, 1.0) == doctest::Approx(4 * 5 / 2.0).epsilon(1e-14));
}

TEST_CASE("project and synthesize") {
  const auto p = profile3();
  SolverConfig cfg;
  const auto [rg, ag] = make_grids(cfg, p);

  SUBCASE("constant function has only mode 0") {
    const auto f = sample(rg, ag, [](double, double) { return 1.0; });
    const auto m = project(f);
    CHECK((m.modes.col(0).array() - 1.0).abs().maxCoeff() < 1e-14);
    for (int c = 1; c < m.modes.cols(); ++c)
      CHECK(m.modes.col(c).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("centrifugal source has modes r^2/6 and -r^2/6") {
    const auto f = sample(rg, ag, g_centrifugal);
    const auto m = project(f);
    for (int i = 0; i < rg.nodes.size(); ++i) {
      const double r2 = rg.nodes[i] * rg.nodes[i];
      CHECK(m.modes(i, 0) == doctest::Approx(r2 / 6.0).epsilon(1e-13));
      CHECK(m.modes(i, 1) == doctest::Approx(-r2 / 6.0).epsilon(1e-13));
      for (int c = 2; c < m.modes.cols(); ++c)
        CHECK(std::abs(m.modes(i, c)) < 1e-12 * r2);
    }
    const auto back = synthesize(m, ag);
    CHECK(sup_norm(back - f) < 1e-12 * sup_norm(f));
  }
  SUBCASE("pure P_4 projects onto mode 4 alone") {
    const auto f = sample(rg, ag, [](double, double z) { return legendre_eval(4, z); });
    const auto m = project(f);
    CHECK((m.modes.col(2).array() - 1.0).abs().maxCoeff() < 1e-12);
    CHECK(m.modes.col(0).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(m.modes.col(1).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("project. synthesize is the identity on banded mode sets") {
    ModeSet m{rg, Eigen::MatrixXd::Zero(rg.nodes.size(), ag.n_modes()), ag.jmax};
    for (int c = 0; c < m.modes.cols(); ++c)
      m.modes.col(c) = (rg.nodes.sin() * (c + 1)).matrix();
    const auto m2 = project(synthesize(m, ag));
    CHECK((m2.modes - m.modes).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("truncation error: zero for banded functions, small for smooth ones") {
    CHECK(truncation_error(sample(rg, ag, g_centrifugal)) < 1e-13);
    const auto smooth = sample(rg, ag, [](double r, double z) {
      return std::exp(-0.1 * r * r) * std::cos(1.5 * z * z);
    });
    const double tr = truncation_error(smooth);
    CHECK(tr > 0.0);
    CHECK(tr < 1e-3);  // jmax=8 leaves a small zeta-profile tail
  }
  SUBCASE("parseval identity for a smooth even function") {
    const auto f = sample(rg, ag, [](double r, double z) {
      return std::exp(-0.05 * r * r) * (1.0 + 0.3 * z * z);
    });
    const auto m = project(f);
    const int i = 20;
    double lhs = 0.0;
    for (int k = 0; k < ag.zeta_nodes.size(); ++k)
      lhs += ag.zeta_weights[k] * f.values(i, k) * f.values(i, k);
    double rhs = 0.0;
    for (int c = 0; c < m.modes.cols(); ++c)
      rhs += m.modes(i, c) * m.modes(i, c) * 2.0 / (2.0 * (2 * c) + 1.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("positive part and sup norm") {
  const auto p = profile3();
  SolverConfig cfg;
  const auto [rg, ag] = make_grids(cfg, p);

  const auto minus1 = sample(rg, ag, [](double, double) { return -1.0; });
  CHECK(sup_norm(positive_part(minus1)) == 0.0);
  const auto plus1 = sample(rg, ag, [](double, double) { return 1.0; });
  CHECK(sup_norm(positive_part(plus1) - plus1) == 0.0);

  const auto th = sample(rg, ag, [&](double r, double) { return eval_theta(p, r); });
  const auto thp = positive_part(th);
  for (int i = 0; i < rg.nodes.size(); ++i) {
    if (rg.nodes[i] < p.xi1)
      CHECK(thp.values(i, 0) == th.values(i, 0));
    else
      CHECK(thp.values(i, 0) == 0.0);
  }
  CHECK(sup_norm(th) == doctest::Approx(eval_theta(p, rg.nodes[0])).epsilon(1e-15));

  const auto g = sample(rg, ag, g_centrifugal);
  CHECK(sup_norm(g) == doctest::Approx(p.xi1 * p.xi1).epsilon(0.02));
  CHECK(sup_norm(g) <= p.xi1 * p.xi1);
}

TEST_CASE("evenness is preserved and sampled bitwise") {
  const auto p = profile3();
  SolverConfig cfg;
  const auto [rg, ag] = make_grids(cfg, p);
  auto f = sample(rg, ag, [](double r, double z) { return std::cos(r) * z * z + r; });
  const int nz = static_cast<int>(ag.zeta_nodes.size());
  auto is_even = [&](const GridFunction& u) {
    for (int k = 0; k < nz / 2; ++k)
      if ((u.values.col(k) - u.values.col(nz - 1 - k)).cwiseAbs().maxCoeff() != 0.0)
        return false;
    return true;
  };
  CHECK(is_even(f));
  CHECK(is_even(positive_part(f)));
  CHECK(is_even(pow_sharp(f, 2.5)));
  CHECK(is_even(synthesize(project(f), ag)));
  CHECK(is_even(f + f));
  CHECK(is_even(2.5 * f));
}

TEST_CASE("split quadrature restores accuracy across a kink") {
  const auto p = profile3();
  const auto g = make_radial_grid(p.xi1, 2 * p.xi1, 4, 2, 16);
  // f smooth on the grid, kernel |r' - s| kinked inside a panel
  const double s = 0.37 * p.xi1;
  Eigen::VectorXd f(g.nodes.size());
  for (int i = 0; i < g.nodes.size(); ++i) f[i] = std::sin(0.4 * g.nodes[i]);
  auto kern = [s](double rp) { return std::abs(rp - s); };
  const double got = integrate_against(g, s, kern, f);
  const double ref = oracle::adaptive_simpson(
      [&](double rp) { return std::abs(rp - s) * std::sin(0.4 * rp); }, 0.0, g.R0, 1e-13);
  CHECK(got == doctest::Approx(ref).epsilon(1e-12));

  // the row functional represents the same quadrature
  const Eigen::VectorXd row = quadrature_row(g, s, kern);
  CHECK(row.dot(f) == doctest::Approx(got).epsilon(1e-14));

  // without a kink the panel rule is exact for smooth integrands
  const double smooth = integrate_against(
      g, -1.0, [](double rp) { return rp * rp; }, f);
  const double ref2 = oracle::adaptive_simpson(
      [](double rp) { return rp * rp * std::sin(0.4 * rp); }, 0.0, g.R0, 1e-13);
  CHECK(smooth == doctest::Approx(ref2).epsilon(1e-12));
}
