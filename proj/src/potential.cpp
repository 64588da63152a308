#include "rotstar/potential.hpp"

#include <cmath>
#include <numbers>

#include "rotstar/errors.hpp"

namespace rotstar {

double elliptic_K_agm(double m) {
  if (!(m >= 0.0 && m < 1.0)) throw OutOfDomain("elliptic_K_agm: m must lie in [0,1)");
  double a = 1.0, b = std::sqrt(1.0 - m);
  while (std::abs(a - b) > 1e-15 * a) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (2.0 * a);
}

KernelEval azimuthal_kernel_eval(double r, double zeta, double rp, double zetap,
                                 double floor) {
  const double a = r * r + rp * rp - 2.0 * r * rp * zeta * zetap;
  const double b = 2.0 * r * rp * std::sqrt((1.0 - zeta * zeta) * (1.0 - zetap * zetap));
  const double apb = a + b;
  if (!(a - b > floor * apb))
    throw CoincidentPoints("azimuthal_kernel: coincident evaluation points");
  const double m = 2.0 * b / apb;
  KernelEval out;
  out.value = 4.0 / std::sqrt(apb) * elliptic_K_agm(m);
  out.near_singular = (1.0 - m) < 1e-3;
  return out;
}

double azimuthal_kernel(double r, double zeta, double rp, double zetap) {
  return azimuthal_kernel_eval(r, zeta, rp, zetap).value;
}

double mode_green(int j, double r, double rp) {
  const double lo = std::min(r, rp), hi = std::max(r, rp);
  if (j == 0) return 1.0 / hi;
  if (lo == 0.0) return 0.0;
  return std::pow(lo / hi, j) / ((2.0 * j + 1.0) * hi);
}

double mode_green_dr(int j, double r, double rp) {
  // branch by which argument is the smaller radius
  if (r < rp) {
    if (j == 0) return 0.0;
    return j * std::pow(r / rp, j - 1) / ((2.0 * j + 1.0) * rp * rp);
  }
  return -(j + 1.0) * std::pow(rp / r, j) / ((2.0 * j + 1.0) * r * r);
}

ModeSet apply_newton_modes(const ModeSet& density, const RadialGrid& rg) {
  ModeSet out{rg, Eigen::MatrixXd(rg.nodes.size(), density.modes.cols()), density.jmax};
  for (int c = 0; c < density.modes.cols(); ++c) {
    const int j = 2 * c;
    const Eigen::VectorXd rho = density.modes.col(c);
    for (int i = 0; i < rg.nodes.size(); ++i) {
      const double r = rg.nodes[i];
      out.modes(i, c) = integrate_against(
          rg, r, [j, r](double rp) { return mode_green(j, r, rp) * rp * rp; }, rho);
    }
  }
  return out;
}

namespace {

// Barycentric weights for interpolation on the angular Gauss nodes.
Eigen::ArrayXd angular_bary(const AngularGrid& ag) {
  const int n = static_cast<int>(ag.zeta_nodes.size());
  Eigen::ArrayXd w(n);
  for (int i = 0; i < n; ++i) {
    double prod = 1.0;
    for (int m = 0; m < n; ++m)
      if (m != i) prod *= ag.zeta_nodes[i] - ag.zeta_nodes[m];
    w[i] = 1.0 / prod;
  }
  return w;
}

Eigen::VectorXd angular_interp_row(const AngularGrid& ag, const Eigen::ArrayXd& bary,
                                   double z) {
  const int n = static_cast<int>(ag.zeta_nodes.size());
  Eigen::VectorXd row(n);
  double denom = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = z - ag.zeta_nodes[i];
    if (d == 0.0) {
      row.setZero();
      row[i] = 1.0;
      return row;
    }
    row[i] = bary[i] / d;
    denom += row[i];
  }
  return row / denom;
}

}  // namespace

GridFunction apply_newton_direct(const GridFunction& density) {
  const RadialGrid& rg = density.rgrid;
  const AngularGrid& ag = density.agrid;
  const int nz = static_cast<int>(ag.zeta_nodes.size());
  GridFunction out{rg, ag, Eigen::MatrixXd::Zero(rg.nodes.size(), nz)};
  const double quarter_pi_inv = 1.0 / (4.0 * std::numbers::pi);
  const Eigen::ArrayXd bary = angular_bary(ag);
  const GaussRule sub = gauss_legendre(16);

  parallel_for(static_cast<int>(rg.nodes.size()), [&](int i) {
    const double r = rg.nodes[i];
    Eigen::VectorXd rho_col(rg.nodes.size());
    for (int k = nz / 2; k < nz; ++k) {  // compute one half, mirror below
      const double z = ag.zeta_nodes[k];
      // The integrand is log-singular at (r', z') = (r, z); grade the angular
      // rule toward z' = z and split the radial rule at r' = r.
      std::vector<double> breaks{-1.0};
      for (double d : {-0.2, -0.02, 0.0, 0.02, 0.2}) {
        const double b = z + d;
        if (b > breaks.back() + 1e-12 && b < 1.0 - 1e-12) breaks.push_back(b);
      }
      breaks.push_back(1.0);

      double acc = 0.0;
      for (size_t q = 0; q + 1 < breaks.size(); ++q) {
        const double mid = 0.5 * (breaks[q] + breaks[q + 1]);
        const double hl = 0.5 * (breaks[q + 1] - breaks[q]);
        for (int s = 0; s < 16; ++s) {
          const double zp = mid + hl * sub.nodes[s];
          rho_col.noalias() = density.values * angular_interp_row(ag, bary, zp);
          acc += hl * sub.weights[s] *
                 integrate_against(
                     rg, r,
                     [&](double rp) {
                       return azimuthal_kernel_eval(r, z, rp, zp).value * rp * rp;
                     },
                     rho_col);
        }
      }
      out.values(i, k) = quarter_pi_inv * acc;
      out.values(i, nz - 1 - k) = out.values(i, k);
    }
  });
  return out;
}

double eval_potential_at(const ModeSet& density, double r, double zeta) {
  double total = 0.0;
  for (int c = 0; c < density.modes.cols(); ++c) {
    const int j = 2 * c;
    const double Ij = integrate_against(
        density.rgrid, r, [j, r](double rp) { return mode_green(j, r, rp) * rp * rp; },
        Eigen::VectorXd(density.modes.col(c)));
    total += Ij * legendre_eval(j, zeta);
  }
  return total;
}

double potential_origin_value(const ModeSet& density) {
  return integrate_against(
      density.rgrid, 0.0, [](double rp) { return rp; },
      Eigen::VectorXd(density.modes.col(0)));
}

}  // namespace rotstar
