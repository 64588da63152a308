#include "rotstar/numerics.hpp"

#include <algorithm>
#include <cstdlib>
#include <numbers>
#include <thread>
#include <vector>

#include "rotstar/errors.hpp"

namespace rotstar {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw ConfigError("gauss_legendre: order must be positive");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15 * std::max(1.0, std::abs(x))) {
        // one clean-up iteration
        p0 = 1.0;
        p1 = x;
        for (int j = 2; j <= n; ++j) {
          double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        x -= p1 / dp;
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // descending positive x as i grows; mirror exactly
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

double legendre_eval(int j, double zeta) {
  if (j == 0) return 1.0;
  if (j == 1) return zeta;
  double p0 = 1.0, p1 = zeta;
  for (int k = 2; k <= j; ++k) {
    double p2 = ((2 * k - 1) * zeta * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double legendre_deriv(int j, double zeta) {
  // P'_{k+1} = P'_{k-1} + (2k+1) P_k
  if (j == 0) return 0.0;
  if (j == 1) return 1.0;
  double p0 = 1.0, p1 = zeta;
  double d0 = 0.0, d1 = 1.0;
  for (int k = 2; k <= j; ++k) {
    double p2 = ((2 * k - 1) * zeta * p1 - (k - 1) * p0) / k;
    double d2 = d0 + (2 * k - 1) * p1;
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
  }
  return d1;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int panels, int order) {
  const GaussRule rule = gauss_legendre(order);
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double pa = a + (b - a) * p / panels;
    const double pb = a + (b - a) * (p + 1) / panels;
    const double mid = 0.5 * (pa + pb), hl = 0.5 * (pb - pa);
    for (int k = 0; k < order; ++k) sum += hl * rule.weights[k] * f(mid + hl * rule.nodes[k]);
  }
  return sum;
}

double find_root(const std::function<double(double)>& f, double a, double b,
                 double fa, double fb, double xtol) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw NoBracket("find_root: interval does not bracket a sign change");
  for (int it = 0; it < 200 && (b - a) > xtol; ++it) {
    // secant guess, safeguarded into the current bracket
    double x = b - fb * (b - a) / (fb - fa);
    const double lo = a + 0.1 * (b - a), hi = b - 0.1 * (b - a);
    if (!(x > lo && x < hi)) x = 0.5 * (a + b);
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (fa * fx < 0.0) {
      b = x;
      fb = fx;
    } else {
      a = x;
      fa = fx;
    }
  }
  return 0.5 * (a + b);
}

std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double a, double b, double xtol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

int thread_cap() {
  static const int cap = [] {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("ROTSTAR_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return std::min(v, hw);
    }
    return hw;
  }();
  return cap;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  const int nt = std::min(n, thread_cap());
  if (nt <= 1 || n < 4) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([=, &fn] {
      for (int i = t; i < n; i += nt) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace rotstar
