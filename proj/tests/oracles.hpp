#pragma once

// Reference computations used only by tests. Each follows a different
// algebraic route from the library so that agreement is evidence.

#include <array>
#include <cmath>
#include <vector>

namespace oracle {

// Vol written directly in cube-root coordinates.
inline long double vol(long double k_star, long double b, long double n, long double m) {
  return std::pow(k_star, 3.0L) * std::pow(b, 3.0L) * std::fabs(n - m);
}

// Central differences in (K*, b) with step rel_step * max(|x|, 1).
inline std::array<double, 2> vol_gradient_fd(double k_star, double b, double n, double m,
                                             double rel_step = 1e-6) {
  const long double hk = rel_step * std::fmax(std::fabs(k_star), 1.0);
  const long double hb = rel_step * std::fmax(std::fabs(b), 1.0);
  const long double gk = (vol(k_star + hk, b, n, m) - vol(k_star - hk, b, n, m)) / (2 * hk);
  const long double gb = (vol(k_star, b + hb, n, m) - vol(k_star, b - hb, n, m)) / (2 * hb);
  return {static_cast<double>(gk), static_cast<double>(gb)};
}

// Second partials by nested central differences.
inline std::array<std::array<double, 2>, 2> vol_hessian_fd(double k_star, double b, double n,
                                                           double m, double h = 1e-4) {
  auto f = [&](long double x, long double y) { return vol(x, y, n, m); };
  const long double kk = (f(k_star + h, b) - 2 * f(k_star, b) + f(k_star - h, b)) / (h * h);
  const long double bb = (f(k_star, b + h) - 2 * f(k_star, b) + f(k_star, b - h)) / (h * h);
  const long double kb = (f(k_star + h, b + h) - f(k_star + h, b - h) - f(k_star - h, b + h) +
                          f(k_star - h, b - h)) /
                         (4 * h * h);
  return {{{static_cast<double>(kk), static_cast<double>(kb)},
           {static_cast<double>(kb), static_cast<double>(bb)}}};
}

// e^s / (C + e^s) with C = (1 - x0) / x0 and s = t - t0, in long double.
inline long double logistic(long double x0, long double t0, long double t) {
  const long double c = (1.0L - x0) / x0;
  const long double es = std::exp(t - t0);
  return es / (c + es);
}

// Fixed-step classical RK4 in long double.
inline long double logistic_rk4(long double x0, long double t0, long double t1, int steps) {
  const long double h = (t1 - t0) / steps;
  auto f = [](long double y) { return y * (1.0L - y); };
  long double y = x0;
  for (int i = 0; i < steps; ++i) {
    const long double k1 = f(y);
    const long double k2 = f(y + h / 2 * k1);
    const long double k3 = f(y + h / 2 * k2);
    const long double k4 = f(y + h * k3);
    y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return y;
}

inline double rel_err(double got, double want) {
  const double scale = std::fmax(std::fabs(want), 1e-300);
  return std::fabs(got - want) / scale;
}

}  // namespace oracle
