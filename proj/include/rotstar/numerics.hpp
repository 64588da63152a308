#pragma once

#include <cmath>
#include <functional>

#include <Eigen/Dense>

namespace rotstar {

/// max(0,x)^p with the conventions needed at a free boundary:
/// nonpositive base gives 0 for p > 0 and 1 for p == 0.
inline double pow_sharp(double x, double p) {
  if (p == 0.0) return 1.0;
  if (x <= 0.0) return 0.0;
  return std::pow(x, p);
}

/// Gauss-Legendre rule on [-1,1]. Nodes ascending, exactly symmetric in pairs.
struct GaussRule {
  Eigen::ArrayXd nodes;
  Eigen::ArrayXd weights;
};

GaussRule gauss_legendre(int n);

/// P_j(zeta) by the three-term recurrence.
double legendre_eval(int j, double zeta);

/// dP_j/dzeta, stable at zeta = +-1 (derivative recurrence).
double legendre_deriv(int j, double zeta);

/// Composite Gauss-Legendre integral of f over [a,b].
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int panels, int order);

/// Safeguarded secant/bisection root refinement on a bracketing interval
/// [a,b] with f(a)*f(b) <= 0. Converges to |b-a| <= xtol.
double find_root(const std::function<double(double)>& f, double a, double b,
                 double fa, double fb, double xtol);

/// Golden-section maximum refinement of f on [a,b] down to width xtol.
/// Returns (x_max, f_max).
std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double a, double b, double xtol);

/// Thread cap from ROTSTAR_THREADS (default: hardware concurrency).
int thread_cap();

/// Run fn(i) for i in [0,n). Tasks must be independent; each writes only its
/// own output slot, so the result is deterministic regardless of scheduling.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace rotstar
