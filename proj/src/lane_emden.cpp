#include "rotstar/lane_emden.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "rotstar/errors.hpp"
#include "rotstar/numerics.hpp"

namespace rotstar {

namespace {

// xi1 > pi for every admissible nu, so pi serves as the universal estimate
// in the seed-radius rule r_s = 1e-3 * max(1, xi1_estimate).
double seed_radius_for() { return 1e-3 * std::max(1.0, std::numbers::pi); }

Vec2 series_seed(double nu, double r) {
  const double r2 = r * r;
  Vec2 y;
  y[0] = 1.0 - r2 / 6.0 + nu * r2 * r2 / 120.0;
  y[1] = -r / 3.0 + nu * r2 * r / 30.0;
  return y;
}

OdeRhs lane_emden_rhs(double nu) {
  return [nu](double r, const Vec2& y) {
    Vec2 dy;
    dy[0] = y[1];
    dy[1] = -2.0 * y[1] / r - pow_sharp(y[0], nu);
    return dy;
  };
}

void check_args(double nu, double tol) {
  // nu = 1 (the linear sin(r)/r profile) is admitted as the family's closed-form
  // anchor; indices below 1 are rejected.
  if (!(nu >= 1.0)) throw InvalidIndex("polytropic index must satisfy nu >= 1");
  if (!(tol >= 1e-14 && tol <= 1e-4))
    throw ConfigError("integration tolerance must lie in [1e-14, 1e-4]");
}

}  // namespace

// Per-step control at `tol` lets global error creep to ~100x tol over the
// integration interval; the internal tolerance keeps the achieved accuracy
// at or below the stated one.
static double internal_tol(double tol) { return std::max(1e-14, 1e-3 * tol); }

LaneEmdenProfile solve_lane_emden(double nu, double tol, double r_max) {
  check_args(nu, tol);
  const double rs = seed_radius_for();
  const double ti = internal_tol(tol);
  const Dopri5Result run = integrate_dopri5(lane_emden_rhs(nu), rs, series_seed(nu, rs),
                                            r_max, ti, ti, /*stop_at_sign_change=*/true);
  if (!run.zero_found)
    throw NoFiniteZero(r_max, "theta has no zero up to r_max=" + std::to_string(r_max) +
                                  "; no finite first zero (expected for nu >= 5)");
  LaneEmdenProfile p;
  p.nu = nu;
  p.tol = tol;
  p.seed_radius = rs;
  p.interior = run.sol;
  p.xi1 = run.t_zero;
  p.mu1 = -p.xi1 * p.xi1 * p.interior.eval(p.xi1)[1];
  return p;
}

OdeSolution integrate_theta(double nu, double tol, double r_end) {
  check_args(nu, tol);
  const double rs = seed_radius_for();
  const double ti = internal_tol(tol);
  return integrate_dopri5(lane_emden_rhs(nu), rs, series_seed(nu, rs), r_end, ti, ti).sol;
}

double eval_theta(const LaneEmdenProfile& p, double r) {
  if (r >= p.xi1) return -p.mu1 * (1.0 / p.xi1 - 1.0 / r);
  if (r < p.seed_radius) {
    const double r2 = r * r;
    return 1.0 - r2 / 6.0 + p.nu * r2 * r2 / 120.0;
  }
  return p.interior.eval(r)[0];
}

double eval_dtheta(const LaneEmdenProfile& p, double r) {
  if (r >= p.xi1) return -p.mu1 / (r * r);
  if (r < p.seed_radius) return -r / 3.0 + p.nu * r * r * r / 30.0;
  return p.interior.eval(r)[1];
}

std::pair<double, double> kovetz_sup(const LaneEmdenProfile& p) {
  auto g = [&p](double r) { return p.nu * pow_sharp(eval_theta(p, r), p.nu - 1.0) * r * r; };
  const int n = 4000;
  int best = 0;
  double gbest = -1.0;
  for (int i = 0; i <= n; ++i) {
    const double gi = g(p.xi1 * i / n);
    if (gi > gbest) {
      gbest = gi;
      best = i;
    }
  }
  const double a = p.xi1 * std::max(0, best - 1) / n;
  const double b = p.xi1 * std::min(n, best + 1) / n;
  auto [rstar, m] = golden_max(g, a, b, 1e-10 * p.xi1);
  if (gbest > m) return {gbest, p.xi1 * best / n};  // maximum on the scan boundary
  return {m, rstar};
}

double milne_ratio(const LaneEmdenProfile& p, double r) {
  if (r >= p.xi1) throw OutOfDomain("milne_ratio requires r < xi1");
  if (r == 0.0) return 0.0;
  return -r * eval_dtheta(p, r) / eval_theta(p, r);
}

double q_identity_residual(const LaneEmdenProfile& p) {
  const double r1 = kovetz_sup(p).second;
  const double nu = p.nu;

  // Cumulative inner integral M(r) = int_0^r theta^nu s^2 ds on a fine
  // composite rule; panel starts are accumulated once, then M at an interior
  // point needs only the tail piece of a single panel.
  const int panels = 64, order = 16;
  const GaussRule rule = gauss_legendre(order);
  auto dens = [&](double s) { return pow_sharp(eval_theta(p, s), nu) * s * s; };
  std::vector<double> Mstart(panels + 1, 0.0);
  for (int q = 0; q < panels; ++q) {
    const double a = r1 * q / panels, b = r1 * (q + 1) / panels;
    const double mid = 0.5 * (a + b), hl = 0.5 * (b - a);
    double s = 0.0;
    for (int k = 0; k < order; ++k) s += hl * rule.weights[k] * dens(mid + hl * rule.nodes[k]);
    Mstart[q + 1] = Mstart[q] + s;
  }
  auto M = [&](double r) {
    int q = std::min(panels - 1, static_cast<int>(r / r1 * panels));
    const double a = r1 * q / panels;
    const double mid = 0.5 * (a + r), hl = 0.5 * (r - a);
    double s = 0.0;
    for (int k = 0; k < order; ++k) s += hl * rule.weights[k] * dens(mid + hl * rule.nodes[k]);
    return Mstart[q] + s;
  };

  auto q_integrand = [&](double r) {
    if (r == 0.0) return 0.0;
    const double th = eval_theta(p, r), dth = eval_dtheta(p, r);
    const double m = M(r);
    return (r * dth + th) / (th * th * r * r) * m * m;
  };
  const double Q = integrate_gl(q_integrand, 0.0, r1, panels, order);

  const double th1 = eval_theta(p, r1);
  const double lhs = M(r1);
  const double two_over = 2.0 / (nu - 1.0);
  const double rhs = r1 * r1 * r1 / 3.0 * pow_sharp(th1, nu) +
                     nu / 6.0 * two_over * two_over * th1 * r1 + nu / 6.0 * Q;
  return std::abs(lhs - rhs) / std::abs(lhs);
}

}  // namespace rotstar
