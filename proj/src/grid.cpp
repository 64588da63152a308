#include "rotstar/grid.hpp"

#include <algorithm>
#include <cmath>

#include "rotstar/errors.hpp"

namespace rotstar {

void SolverConfig::validate() const {
  if (!(nu >= 1.0)) throw ConfigError("config: nu must be >= 1");
  if (jmax < 0 || jmax % 2 != 0) throw ConfigError("config: jmax must be even and >= 0");
  if (panels_interior < 1 || panels_exterior < 1 || nodes_per_panel < 2)
    throw ConfigError("config: panel and node counts must be positive");
  if (angular_order < 2 || angular_order % 2 != 0)
    throw ConfigError("config: angular order must be even and >= 2");
  if (angular_order < 2 * jmax)
    throw ConfigError("config: angular order must be at least 2*jmax");
  if (!(fp_tol > 0.0)) throw ConfigError("config: fp_tol must be positive");
  if (max_iter < 1) throw ConfigError("config: max_iter must be >= 1");
  if (!(r0_factor >= 2.0)) throw ConfigError("config: r0_factor must be >= 2");
  if (!(ode_tol >= 1e-14 && ode_tol <= 1e-4))
    throw ConfigError("config: ode_tol must lie in [1e-14, 1e-4]");
}

int RadialGrid::panel_of(double r) const {
  const auto it = std::upper_bound(panel_breaks.begin(), panel_breaks.end(), r);
  int p = static_cast<int>(it - panel_breaks.begin()) - 1;
  return std::clamp(p, 0, panel_count() - 1);
}

namespace detail {

void barycentric_row(const RadialGrid& g, double u, Eigen::VectorXd& row) {
  const int n = g.nodes_per_panel;
  double denom = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = u - g.ref.nodes[i];
    if (d == 0.0) {
      row.setZero();
      row[i] = 1.0;
      return;
    }
    row[i] = g.ref_bary[i] / d;
    denom += row[i];
  }
  row /= denom;
}

}  // namespace detail

RadialGrid make_radial_grid(double xi1, double R0, int panels_interior,
                            int panels_exterior, int nodes_per_panel) {
  if (panels_interior < 1 || panels_exterior < 1 || nodes_per_panel < 2)
    throw ConfigError("make_radial_grid: sizes must be positive");
  if (!(xi1 > 0.0 && R0 > xi1)) throw ConfigError("make_radial_grid: need 0 < xi1 < R0");

  RadialGrid g;
  g.xi1 = xi1;
  g.R0 = R0;
  g.nodes_per_panel = nodes_per_panel;
  g.ref = gauss_legendre(nodes_per_panel);
  g.ref_bary.resize(nodes_per_panel);
  for (int i = 0; i < nodes_per_panel; ++i) {
    double w = 1.0;
    for (int m = 0; m < nodes_per_panel; ++m)
      if (m != i) w *= g.ref.nodes[i] - g.ref.nodes[m];
    g.ref_bary[i] = 1.0 / w;
  }

  g.panel_breaks.push_back(0.0);
  for (int p = 1; p <= panels_interior; ++p)
    g.panel_breaks.push_back(xi1 * p / panels_interior);
  for (int p = 1; p <= panels_exterior; ++p)
    g.panel_breaks.push_back(xi1 + (R0 - xi1) * p / panels_exterior);

  const int n = (panels_interior + panels_exterior) * nodes_per_panel;
  g.nodes.resize(n);
  g.weights.resize(n);
  for (int p = 0; p < g.panel_count(); ++p) {
    const double a = g.panel_breaks[p], b = g.panel_breaks[p + 1];
    const double mid = 0.5 * (a + b), hl = 0.5 * (b - a);
    for (int i = 0; i < nodes_per_panel; ++i) {
      g.nodes[p * nodes_per_panel + i] = mid + hl * g.ref.nodes[i];
      g.weights[p * nodes_per_panel + i] = hl * g.ref.weights[i];
    }
  }
  g.n_interior = panels_interior * nodes_per_panel;
  return g;
}

AngularGrid make_angular_grid(int order, int jmax) {
  if (order < 2 || order % 2 != 0)
    throw ConfigError("make_angular_grid: order must be even and >= 2");
  if (jmax < 0 || jmax % 2 != 0)
    throw ConfigError("make_angular_grid: jmax must be even and >= 0");
  AngularGrid ag;
  ag.jmax = jmax;
  const GaussRule rule = gauss_legendre(order);
  ag.zeta_nodes = rule.nodes;
  ag.zeta_weights = rule.weights;
  ag.legendre_table.resize(order, jmax + 1);
  for (int k = 0; k < order; ++k)
    for (int j = 0; j <= jmax; ++j)
      ag.legendre_table(k, j) = legendre_eval(j, ag.zeta_nodes[k]);
  return ag;
}

std::pair<RadialGrid, AngularGrid> make_grids(const SolverConfig& config,
                                              const LaneEmdenProfile& profile) {
  config.validate();
  RadialGrid rg = make_radial_grid(profile.xi1, config.r0_factor * profile.xi1,
                                   config.panels_interior, config.panels_exterior,
                                   config.nodes_per_panel);
  AngularGrid ag = make_angular_grid(config.angular_order, config.jmax);
  return {std::move(rg), std::move(ag)};
}

GridFunction sample(const RadialGrid& rg, const AngularGrid& ag,
                    const std::function<double(double, double)>& f) {
  GridFunction out{rg, ag, Eigen::MatrixXd(rg.nodes.size(), ag.zeta_nodes.size())};
  const int nz = static_cast<int>(ag.zeta_nodes.size());
  for (int k = nz / 2; k < nz; ++k) {
    const int km = nz - 1 - k;  // mirrored column
    for (int i = 0; i < rg.nodes.size(); ++i) {
      const double v = f(rg.nodes[i], ag.zeta_nodes[k]);
      out.values(i, k) = v;
      out.values(i, km) = v;
    }
  }
  return out;
}

ModeSet project(const GridFunction& f) {
  const int jmax = f.agrid.jmax;
  const int nm = jmax / 2 + 1;
  Eigen::MatrixXd basis(f.agrid.zeta_nodes.size(), nm);
  for (int m = 0; m < nm; ++m) {
    const int j = 2 * m;
    basis.col(m) = (j + 0.5) * (f.agrid.legendre_table.col(j).array() *
                                f.agrid.zeta_weights)
                                   .matrix();
  }
  return ModeSet{f.rgrid, f.values * basis, jmax};
}

GridFunction synthesize(const ModeSet& m, const AngularGrid& ag) {
  const int nm = m.jmax / 2 + 1;
  Eigen::MatrixXd basis(ag.zeta_nodes.size(), nm);
  for (int c = 0; c < nm; ++c) basis.col(c) = ag.legendre_table.col(2 * c);
  return GridFunction{m.rgrid, ag, m.modes * basis.transpose()};
}

GridFunction positive_part(const GridFunction& f) {
  return {f.rgrid, f.agrid, f.values.cwiseMax(0.0)};
}

GridFunction pow_sharp(const GridFunction& f, double p) {
  GridFunction out{f.rgrid, f.agrid,
                   f.values.unaryExpr([p](double x) { return pow_sharp(x, p); })};
  return out;
}

double sup_norm(const GridFunction& f) { return f.values.cwiseAbs().maxCoeff(); }

double truncation_error(const GridFunction& f) {
  return sup_norm(synthesize(project(f), f.agrid) - f);
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
  return {a.rgrid, a.agrid, a.values + b.values};
}
GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  return {a.rgrid, a.agrid, a.values - b.values};
}
GridFunction operator*(double s, const GridFunction& a) {
  return {a.rgrid, a.agrid, s * a.values};
}

}  // namespace rotstar
