#include "rotstar/perturbation.hpp"

#include <cmath>

#include "rotstar/errors.hpp"

namespace rotstar {

namespace {

constexpr double kSeed = 1e-3;

// y'' + 2 y'/r - j(j+1) y/r^2 + nu theta^(nu-1) y = 0 as a first-order system
OdeRhs mode_rhs(const LaneEmdenProfile& p, int j) {
  const double jj = static_cast<double>(j) * (j + 1);
  return [&p, jj](double r, const Vec2& y) {
    Vec2 dy;
    dy[0] = y[1];
    dy[1] = -2.0 * y[1] / r + jj * y[0] / (r * r) -
            p.nu * pow_sharp(eval_theta(p, r), p.nu - 1.0) * y[0];
    return dy;
  };
}

}  // namespace

double ModeODESolution::value(double r) const {
  if (r < seed_radius) return std::pow(r, j) * (1.0 + c2 * r * r);
  return sol.eval(r)[0];
}

double ModeODESolution::deriv(double r) const {
  if (r < seed_radius)
    return j * std::pow(r, j - 1) + (j + 2) * c2 * std::pow(r, j + 1);
  return sol.eval(r)[1];
}

ModeODESolution solve_Ej(const LaneEmdenProfile& p, int j, double tol) {
  if (j < 2 || j % 2 != 0) throw InvalidMode("solve_Ej: j must be even and >= 2");
  ModeODESolution out;
  out.j = j;
  out.nu = p.nu;
  out.xi1 = p.xi1;
  out.seed_radius = kSeed;
  out.c2 = -p.nu / (2.0 * (2.0 * j + 3.0));
  Vec2 y0;
  y0[0] = std::pow(kSeed, j) * (1.0 + out.c2 * kSeed * kSeed);
  y0[1] = j * std::pow(kSeed, j - 1) + (j + 2) * out.c2 * std::pow(kSeed, j + 1);
  // psi_j spans many decades (r^j from 1e-3); relative control dominates
  out.sol = integrate_dopri5(mode_rhs(p, j), kSeed, y0, p.xi1, tol,
                             tol * std::pow(kSeed, j), false)
                .sol;
  return out;
}

double dj_functional(const ModeODESolution& sol) {
  const double r = sol.xi1;
  return (sol.j + 1.0) / r * sol.value(r) + sol.deriv(r);
}

double H0Solution::value(double r) const {
  if (r < seed_radius) {
    const double r2 = r * r;
    const double v0 = 1.0 / nu + (nu - 1.0) / 120.0 * r2 * r2;
    const double v1 = 1.0 - nu * r2 / 6.0 + nu * (2.0 * nu - 1.0) / 120.0 * r2 * r2;
    return v0 - v1 / nu;
  }
  return y0.eval(r)[0] - y1.eval(r)[0] / nu;
}

double H0Solution::deriv(double r) const {
  if (r < seed_radius) {
    const double r3 = r * r * r;
    const double d0 = (nu - 1.0) / 30.0 * r3;
    const double d1 = -nu * r / 3.0 + nu * (2.0 * nu - 1.0) / 30.0 * r3;
    return d0 - d1 / nu;
  }
  return y0.eval(r)[1] - y1.eval(r)[1] / nu;
}

H0Solution solve_h0(const LaneEmdenProfile& p, double tol) {
  H0Solution out;
  out.nu = p.nu;
  out.xi1 = p.xi1;
  out.seed_radius = kSeed;
  const double nu = p.nu;
  const double rs = kSeed;
  const double rs2 = rs * rs;

  auto rhs_particular = [&p, nu](double r, const Vec2& y) {
    Vec2 dy;
    dy[0] = y[1];
    dy[1] = -2.0 * y[1] / r + 1.0 - nu * pow_sharp(eval_theta(p, r), nu - 1.0) * y[0];
    return dy;
  };
  auto rhs_homogeneous = [&p, nu](double r, const Vec2& y) {
    Vec2 dy;
    dy[0] = y[1];
    dy[1] = -2.0 * y[1] / r - nu * pow_sharp(eval_theta(p, r), nu - 1.0) * y[0];
    return dy;
  };

  Vec2 s0;  // y0 = 1/nu + (nu-1) r^4 / 120
  s0[0] = 1.0 / nu + (nu - 1.0) / 120.0 * rs2 * rs2;
  s0[1] = (nu - 1.0) / 30.0 * rs2 * rs;
  out.y0 = integrate_dopri5(rhs_particular, rs, s0, p.xi1, tol, tol, false).sol;

  Vec2 s1;  // y1 = 1 - nu r^2/6 + nu(2nu-1) r^4/120
  s1[0] = 1.0 - nu * rs2 / 6.0 + nu * (2.0 * nu - 1.0) / 120.0 * rs2 * rs2;
  s1[1] = -nu * rs / 3.0 + nu * (2.0 * nu - 1.0) / 30.0 * rs2 * rs;
  out.y1 = integrate_dopri5(rhs_homogeneous, rs, s1, p.xi1, tol, tol, false).sol;
  return out;
}

A2Result coeff_A2(const LaneEmdenProfile& p, double tol) {
  const auto psi2 = solve_Ej(p, 2, tol);
  const double r = p.xi1;
  const double v = psi2.value(r), d = psi2.deriv(r);
  const double denom = 3.0 * v + r * d;
  if (std::abs(denom) < 1e-12)
    throw DegenerateMatching("coeff_A2: matching denominator vanishes");
  A2Result out;
  out.A2 = -(5.0 / 6.0) * r * r / denom;
  out.C2 = std::pow(r, 3) * (out.A2 * v + r * r / 6.0);
  // residuals of the two matching rows (value row is solved exactly)
  const double row1 = out.A2 * v - (-r * r / 6.0 + out.C2 / std::pow(r, 3));
  const double row2 = out.A2 * d - (-r / 3.0 - 3.0 * out.C2 / std::pow(r, 4));
  out.match_residual_value = std::abs(row1) / (r * r / 6.0);
  out.match_residual_deriv = std::abs(row2) / (r / 3.0);
  return out;
}

ModeSet frak_h(const LaneEmdenProfile& p, const RadialGrid& rg, int jmax, double tol) {
  const auto h0 = solve_h0(p, tol);
  const auto psi2 = solve_Ej(p, 2, tol);
  const double A2 = coeff_A2(p, tol).A2;
  ModeSet out{rg, Eigen::MatrixXd::Zero(rg.nodes.size(), jmax / 2 + 1), jmax};
  for (int i = 0; i < rg.n_interior; ++i) {
    const double r = rg.nodes[i];
    out.modes(i, 0) = h0.value(r);
    if (jmax >= 2) out.modes(i, 1) = A2 * psi2.value(r);
  }
  return out;
}

double sigma_first_order(const LaneEmdenProfile& p, double tol) {
  const auto psi2 = solve_Ej(p, 2, tol);
  const double A2 = coeff_A2(p, tol).A2;
  return -1.5 * (p.xi1 / p.mu1) * A2 * psi2.value(p.xi1);
}

}  // namespace rotstar
