#include "rotstar/operator_core.hpp"

#include <cmath>
#include <limits>

#include "rotstar/errors.hpp"

namespace rotstar {

namespace {

// Kernel of DG(theta) for mode j: (G_j - [j==0] 1/r') nu theta^(nu-1)(r') r'^2.
// The theta factor is evaluated exactly at the quadrature abscissae, so only
// h is interpolated across the split panel.
struct DgKernel {
  const LaneEmdenProfile& p;
  int j;
  double r;
  double operator()(double rp) const {
    const double w = p.nu * pow_sharp(eval_theta(p, rp), p.nu - 1.0) * rp * rp;
    if (w == 0.0) return 0.0;
    double g = mode_green(j, r, rp);
    if (j == 0) g -= 1.0 / rp;
    return g * w;
  }
};

}  // namespace

GridFunction theta_grid(const LaneEmdenProfile& p, const RadialGrid& rg,
                        const AngularGrid& ag) {
  return sample(rg, ag, [&p](double r, double) { return eval_theta(p, r); });
}

GridFunction apply_G(const GridFunction& u, double nu) {
  const ModeSet rho = project(pow_sharp(positive_part(u), nu));
  const ModeSet pot = apply_newton_modes(rho, u.rgrid);
  const double origin = potential_origin_value(rho);
  GridFunction out = synthesize(pot, u.agrid);
  out.values.array() += 1.0 - origin;
  return out;
}

GridFunction apply_DG_theta(const LaneEmdenProfile& p, const GridFunction& h) {
  const ModeSet hm = project(h);
  const RadialGrid& rg = h.rgrid;
  ModeSet out{rg, Eigen::MatrixXd(rg.nodes.size(), hm.modes.cols()), hm.jmax};
  for (int c = 0; c < hm.modes.cols(); ++c) {
    const Eigen::VectorXd hj = hm.modes.col(c);
    for (int i = 0; i < rg.nodes.size(); ++i) {
      out.modes(i, c) =
          integrate_against(rg, rg.nodes[i], DgKernel{p, 2 * c, rg.nodes[i]}, hj);
    }
  }
  return synthesize(out, h.agrid);
}

GridFunction omega(const LaneEmdenProfile& p, const GridFunction& h) {
  const GridFunction th = theta_grid(p, h.rgrid, h.agrid);
  return apply_G(th + h, p.nu) - apply_G(th, p.nu) - apply_DG_theta(p, h);
}

ResolventFactorization build_resolvent(const LaneEmdenProfile& p, const RadialGrid& rg,
                                       const AngularGrid& ag) {
  ResolventFactorization fact;
  fact.nu = p.nu;
  fact.jmax = ag.jmax;
  fact.rgrid = rg;
  fact.agrid = ag;
  if (p.nu < 2.0)
    fact.warnings.push_back(
        "nu < 2: invertibility and contraction are outside the supported range; "
        "results are exploratory");

  const int nm = ag.n_modes();
  const int n = static_cast<int>(rg.nodes.size());
  const int ni = rg.n_interior;
  fact.dg.resize(nm);
  fact.lu.reserve(nm);
  fact.condition.resize(nm);

  std::vector<Eigen::MatrixXd> mats(nm);
  parallel_for(nm, [&](int c) {
    const int j = 2 * c;
    Eigen::MatrixXd D(n, ni);
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXd row =
          quadrature_row(rg, rg.nodes[i], DgKernel{p, j, rg.nodes[i]});
      D.row(i) = row.head(ni).transpose();
    }
    mats[c] = D;
  });
  for (int c = 0; c < nm; ++c) {
    fact.dg[c] = std::move(mats[c]);
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(ni, ni) - fact.dg[c].topRows(ni);
    fact.lu.emplace_back(M);
    const double rc = fact.lu.back().rcond();
    fact.condition[c] = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
    if (!(rc > 1e-13))
      throw SingularMode(2 * c,
                         "resolvent mode " + std::to_string(2 * c) +
                             " is numerically singular; refine the radial grid");
  }
  return fact;
}

GridFunction resolvent_apply(const ResolventFactorization& fact, const GridFunction& s) {
  const ModeSet sm = project(s);
  const RadialGrid& rg = fact.rgrid;
  const int n = static_cast<int>(rg.nodes.size());
  const int ni = rg.n_interior;
  ModeSet out{rg, Eigen::MatrixXd(n, sm.modes.cols()), sm.jmax};
  for (int c = 0; c < sm.modes.cols(); ++c) {
    const Eigen::VectorXd sj = sm.modes.col(c);
    const Eigen::VectorXd x = fact.lu[c].solve(sj.head(ni));
    out.modes.col(c).head(ni) = x;
    // exterior: h = s + DG h needs only interior h values
    out.modes.col(c).tail(n - ni) =
        sj.tail(n - ni) + fact.dg[c].bottomRows(n - ni) * x;
  }
  return synthesize(out, fact.agrid);
}

GridFunction dg_apply(const ResolventFactorization& fact, const GridFunction& h) {
  const ModeSet hm = project(h);
  ModeSet out{fact.rgrid, Eigen::MatrixXd(fact.rgrid.nodes.size(), hm.modes.cols()),
              hm.jmax};
  for (int c = 0; c < hm.modes.cols(); ++c)
    out.modes.col(c) = fact.dg[c] * hm.modes.col(c).head(fact.rgrid.n_interior);
  return synthesize(out, fact.agrid);
}

}  // namespace rotstar
