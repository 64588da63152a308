#include "rotstar/ode.hpp"

#include <algorithm>
#include <cmath>

#include "rotstar/errors.hpp"
#include "rotstar/numerics.hpp"

namespace rotstar {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// dense-output coefficients (Hairer-Norsett-Wanner)
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

}  // namespace

Vec2 OdeSolution::eval(double t) const {
  if (steps.empty()) throw Error("OdeSolution::eval on empty trajectory");
  // binary search for the step containing t
  int lo = 0, hi = static_cast<int>(steps.size()) - 1;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (t < steps[mid].t0 + steps[mid].h)
      hi = mid;
    else
      lo = mid + 1;
  }
  return steps[lo].eval(t);
}

Dopri5Result integrate_dopri5(const OdeRhs& f, double t0, const Vec2& y0,
                              double t_end, double rtol, double atol,
                              bool stop_at_sign_change) {
  Dopri5Result out;
  out.sol.t_begin = t0;

  double t = t0;
  Vec2 y = y0;
  Vec2 k1 = f(t, y);
  double h = 1e-4 * std::max(1.0, std::abs(t_end - t0));
  const double hmax = 0.1 * std::abs(t_end - t0);
  const double hmin = 1e-14 * std::max(1.0, std::abs(t_end));

  while (t < t_end) {
    h = std::min({h, hmax, t_end - t});
    const Vec2 k2 = f(t + c2 * h, y + h * (a21 * k1));
    const Vec2 k3 = f(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
    const Vec2 k4 = f(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Vec2 k5 = f(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Vec2 k6 =
        f(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Vec2 ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Vec2 k7 = f(t + h, ynew);

    const Vec2 errv = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      const double q = errv[i] / sc;
      err += q * q;
    }
    err = std::sqrt(0.5 * err);

    if (err <= 1.0) {
      DenseStep st;
      st.t0 = t;
      st.h = h;
      const Vec2 ydiff = ynew - y;
      st.r1 = y;
      st.r2 = ydiff;
      st.r3 = h * k1 - ydiff;
      st.r4 = ydiff - h * k7 - st.r3;
      st.r5 = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
      out.sol.steps.push_back(st);

      const double t_next = t + h;
      if (stop_at_sign_change && y[0] > 0.0 && ynew[0] <= 0.0) {
        auto comp0 = [&st](double tt) { return st.eval(tt)[0]; };
        out.zero_found = true;
        out.t_zero = (ynew[0] == 0.0)
                         ? t_next
                         : find_root(comp0, t, t_next, y[0], ynew[0],
                                     1e-15 * std::max(1.0, t_next));
        out.sol.t_end = t_next;
        return out;
      }
      t = t_next;
      y = ynew;
      k1 = k7;  // FSAL
    }
    double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    fac = std::clamp(fac, 0.2, 5.0);
    h *= fac;
    if (h < hmin) throw Error("integrate_dopri5: step size underflow");
  }
  out.sol.t_end = t_end;
  return out;
}

}  // namespace rotstar
