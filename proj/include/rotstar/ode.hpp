#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace rotstar {

using Vec2 = Eigen::Vector2d;
using OdeRhs = std::function<Vec2(double, const Vec2&)>;

/// One accepted step with the quartic dense-output coefficients.
struct DenseStep {
  double t0 = 0.0;
  double h = 0.0;
  Vec2 r1, r2, r3, r4, r5;

  Vec2 eval(double t) const {
    const double s = (t - t0) / h;
    const double s1 = 1.0 - s;
    return r1 + s * (r2 + s1 * (r3 + s * (r4 + s1 * r5)));
  }
};

/// Dense-output trajectory of a 2-component system, t ascending.
struct OdeSolution {
  std::vector<DenseStep> steps;
  double t_begin = 0.0;
  double t_end = 0.0;

  /// Evaluate the continuous extension at t in [t_begin, t_end].
  Vec2 eval(double t) const;
};

struct Dopri5Result {
  OdeSolution sol;
  bool zero_found = false;
  double t_zero = 0.0;
};

/// Adaptive Dormand-Prince 5(4) with 4th-order continuous output.
/// When stop_at_sign_change is set, integration stops at the first sign
/// change of component 0 and t_zero is refined on the dense interpolant.
Dopri5Result integrate_dopri5(const OdeRhs& f, double t0, const Vec2& y0,
                              double t_end, double rtol, double atol,
                              bool stop_at_sign_change = false);

}  // namespace rotstar
