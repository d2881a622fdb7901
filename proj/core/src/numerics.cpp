#include "fiscalstab/numerics.hpp"

#include <cmath>
#include <string>

#include "fiscalstab/error.hpp"

namespace fiscalstab::numerics {
namespace {

struct Panel {
  double a, m, b;
  double fa, fm, fb;
  double whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double eval(const std::function<double(double)>& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw NumericError("integrand is not finite at x = " + std::to_string(x));
  }
  return y;
}

double refine(const std::function<double(double)>& f, const Panel& p, double tol, int depth) {
  const double lm = 0.5 * (p.a + p.m);
  const double rm = 0.5 * (p.m + p.b);
  const double flm = eval(f, lm);
  const double frm = eval(f, rm);
  const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
  const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
  const double delta = left + right - p.whole;
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) throw NumericError("adaptive quadrature did not converge");
  return refine(f, {p.a, lm, p.m, p.fa, flm, p.fm, left}, 0.5 * tol, depth - 1) +
         refine(f, {p.m, rm, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
  if (!(abs_tol > 0.0)) throw DomainError("abs_tol", "must be positive");
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = eval(f, a);
  const double fm = eval(f, m);
  const double fb = eval(f, b);
  return refine(f, {a, m, b, fa, fm, fb, simpson(a, b, fa, fm, fb)}, abs_tol, max_depth);
}

void require_grid(std::span<const double> t, std::span<const double> f, std::size_t min_size) {
  if (t.size() != f.size()) throw DomainError("samples", "grid and sample sizes differ");
  if (t.size() < min_size) {
    throw DomainError("grid", "needs at least " + std::to_string(min_size) + " samples");
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!std::isfinite(t[i])) throw DomainError("grid", "non-finite time");
    if (i > 0 && !(t[i] > t[i - 1])) throw DomainError("grid", "must be strictly increasing");
  }
}

std::vector<double> first_derivative(std::span<const double> t, std::span<const double> f) {
  require_grid(t, f, 3);
  const std::size_t n = t.size();
  std::vector<double> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h1 = t[i] - t[i - 1];
    const double h2 = t[i + 1] - t[i];
    d[i] = -h2 / (h1 * (h1 + h2)) * f[i - 1] + (h2 - h1) / (h1 * h2) * f[i] +
           h1 / (h2 * (h1 + h2)) * f[i + 1];
  }
  {
    const double h1 = t[1] - t[0];
    const double h2 = t[2] - t[1];
    d[0] = -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * f[0] + (h1 + h2) / (h1 * h2) * f[1] -
           h1 / (h2 * (h1 + h2)) * f[2];
  }
  {
    const double h1 = t[n - 2] - t[n - 3];
    const double h2 = t[n - 1] - t[n - 2];
    d[n - 1] = h2 / (h1 * (h1 + h2)) * f[n - 3] - (h1 + h2) / (h1 * h2) * f[n - 2] +
               (2.0 * h2 + h1) / (h2 * (h1 + h2)) * f[n - 1];
  }
  return d;
}

std::vector<double> second_derivative(std::span<const double> t, std::span<const double> f) {
  require_grid(t, f, 3);
  const std::size_t n = t.size();
  auto stencil = [&](std::size_t i) {
    const double h1 = t[i] - t[i - 1];
    const double h2 = t[i + 1] - t[i];
    return 2.0 * (f[i - 1] / (h1 * (h1 + h2)) - f[i] / (h1 * h2) + f[i + 1] / (h2 * (h1 + h2)));
  };
  std::vector<double> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = stencil(i);
  d[0] = stencil(1);
  d[n - 1] = stencil(n - 2);
  return d;
}

}  // namespace fiscalstab::numerics
