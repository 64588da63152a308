#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rotstar/config.hpp"
#include "rotstar/lane_emden.hpp"
#include "rotstar/numerics.hpp"

namespace rotstar {

/// Composite Gauss-Legendre radial grid on [0, R0] with a panel break pinned
/// at xi1 (integrands built from theta_sharp powers kink there). Nodes lie
/// strictly inside their panels. Immutable after construction.
struct RadialGrid {
  Eigen::ArrayXd nodes;              // ascending, in (0, R0)
  Eigen::ArrayXd weights;            // positive, sum R0
  std::vector<double> panel_breaks;  // includes 0, xi1, R0
  double xi1 = 0.0;
  double R0 = 0.0;
  int nodes_per_panel = 0;
  int n_interior = 0;  // nodes below xi1

  // reference rule and barycentric weights shared by every panel
  GaussRule ref;
  Eigen::ArrayXd ref_bary;

  int panel_count() const { return static_cast<int>(panel_breaks.size()) - 1; }
  int panel_of(double r) const;
};

/// Symmetric Gauss-Legendre rule on [-1,1] with a Legendre value table up to
/// jmax. Nodes come in exactly mirrored +- pairs.
struct AngularGrid {
  Eigen::ArrayXd zeta_nodes;      // ascending, symmetric
  Eigen::ArrayXd zeta_weights;    // sum 2
  Eigen::MatrixXd legendre_table; // n_zeta x (jmax+1), P_j(zeta_k)
  int jmax = 0;

  int n_modes() const { return jmax / 2 + 1; }
};

/// An even-in-zeta function sampled on the product grid.
struct GridFunction {
  RadialGrid rgrid;
  AngularGrid agrid;
  Eigen::MatrixXd values;  // n_r x n_zeta
};

/// Radial arrays of even Legendre modes h_j, j = 2*column.
struct ModeSet {
  RadialGrid rgrid;
  Eigen::MatrixXd modes;  // n_r x n_modes
  int jmax = 0;
};

RadialGrid make_radial_grid(double xi1, double R0, int panels_interior,
                            int panels_exterior, int nodes_per_panel);
AngularGrid make_angular_grid(int order, int jmax);
std::pair<RadialGrid, AngularGrid> make_grids(const SolverConfig& config,
                                              const LaneEmdenProfile& profile);

/// Sample f(r, zeta); mirrored zeta columns are assigned from one evaluation,
/// so evenness holds bitwise.
GridFunction sample(const RadialGrid& rg, const AngularGrid& ag,
                    const std::function<double(double, double)>& f);

/// Legendre analysis: h_j(r_i) = (j + 1/2) sum_k w_k f(r_i, zeta_k) P_j(zeta_k).
ModeSet project(const GridFunction& f);

/// Legendre synthesis of the even modes back onto the grid.
GridFunction synthesize(const ModeSet& m, const AngularGrid& ag);

GridFunction positive_part(const GridFunction& f);
GridFunction pow_sharp(const GridFunction& f, double p);
double sup_norm(const GridFunction& f);

/// Spectral truncation error of the mode cutoff: sup |synthesize(project(f)) - f|.
double truncation_error(const GridFunction& f);

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(double s, const GridFunction& a);

/// Quadrature of kern(r') * f(r') over [0, R0] where f is known at the grid
/// nodes. Panels away from r_split use their native rule; the panel containing
/// r_split is split there into two sub-rules of the same order with f
/// interpolated barycentrically from the panel's nodes. This restores full
/// accuracy for kernels with a kink or jump at r' = r_split.
template <class Kernel>
double integrate_against(const RadialGrid& g, double r_split, Kernel&& kern,
                         const Eigen::VectorXd& f);

/// Same quadrature expressed as a row functional on nodal values.
template <class Kernel>
Eigen::VectorXd quadrature_row(const RadialGrid& g, double r_split, Kernel&& kern);

// --- implementation of the templated quadrature ---

namespace detail {

/// Barycentric second-form weights of f at reference coordinate u in [-1,1],
/// written into row (size nodes_per_panel).
void barycentric_row(const RadialGrid& g, double u, Eigen::VectorXd& row);

inline bool splits_panel(const RadialGrid& g, int p, double r_split) {
  const double a = g.panel_breaks[p], b = g.panel_breaks[p + 1];
  const double margin = 1e-12 * (b - a);
  return r_split > a + margin && r_split < b - margin;
}

}  // namespace detail

template <class Kernel>
double integrate_against(const RadialGrid& g, double r_split, Kernel&& kern,
                         const Eigen::VectorXd& f) {
  const int npp = g.nodes_per_panel;
  double total = 0.0;
  Eigen::VectorXd bary(npp);
  for (int p = 0; p < g.panel_count(); ++p) {
    const double a = g.panel_breaks[p], b = g.panel_breaks[p + 1];
    const int base = p * npp;
    if (!detail::splits_panel(g, p, r_split)) {
      for (int i = 0; i < npp; ++i)
        total += g.weights[base + i] * kern(g.nodes[base + i]) * f[base + i];
      continue;
    }
    const auto fseg = f.segment(base, npp);
    for (const auto& [lo, hi] : {std::pair{a, r_split}, std::pair{r_split, b}}) {
      const double mid = 0.5 * (lo + hi), hl = 0.5 * (hi - lo);
      for (int s = 0; s < npp; ++s) {
        const double x = mid + hl * g.ref.nodes[s];
        const double u = (2.0 * x - a - b) / (b - a);
        detail::barycentric_row(g, u, bary);
        total += hl * g.ref.weights[s] * kern(x) * bary.dot(fseg);
      }
    }
  }
  return total;
}

template <class Kernel>
Eigen::VectorXd quadrature_row(const RadialGrid& g, double r_split, Kernel&& kern) {
  const int npp = g.nodes_per_panel;
  Eigen::VectorXd row = Eigen::VectorXd::Zero(g.nodes.size());
  Eigen::VectorXd bary(npp);
  for (int p = 0; p < g.panel_count(); ++p) {
    const double a = g.panel_breaks[p], b = g.panel_breaks[p + 1];
    const int base = p * npp;
    if (!detail::splits_panel(g, p, r_split)) {
      for (int i = 0; i < npp; ++i)
        row[base + i] += g.weights[base + i] * kern(g.nodes[base + i]);
      continue;
    }
    for (const auto& [lo, hi] : {std::pair{a, r_split}, std::pair{r_split, b}}) {
      const double mid = 0.5 * (lo + hi), hl = 0.5 * (hi - lo);
      for (int s = 0; s < npp; ++s) {
        const double x = mid + hl * g.ref.nodes[s];
        const double u = (2.0 * x - a - b) / (b - a);
        detail::barycentric_row(g, u, bary);
        row.segment(base, npp) += hl * g.ref.weights[s] * kern(x) * bary;
      }
    }
  }
  return row;
}

}  // namespace rotstar
