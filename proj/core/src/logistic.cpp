#include "fiscalstab/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fiscalstab/error.hpp"

namespace fiscalstab::effectiveness {
namespace {

double rhs(double b) { return b * (1.0 - b); }

double rk4_step(double y, double h) {
  const double k1 = rhs(y);
  const double k2 = rhs(y + 0.5 * h * k1);
  const double k3 = rhs(y + 0.5 * h * k2);
  const double k4 = rhs(y + h * k3);
  return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void check_bounded(double y, double t, const NumericOptions& options) {
  if (!std::isfinite(y) || std::fabs(y) > options.blow_up) {
    throw SingularityError("logistic trajectory diverges near t = " + std::to_string(t), t);
  }
}

// Integrates from (t, y) to t_end with step-doubling error control against a
// relative local tolerance. Returns the value at t_end.
double integrate_interval(double y, double t, double t_end, double local_tol,
                          double& h, const NumericOptions& options) {
  const double span = t_end - t;
  h = std::min(h, span);
  const double h_min = 1e-15 * std::max(1.0, std::fabs(t_end));

  while (t < t_end) {
    const bool last = t + h >= t_end;
    const double step = last ? t_end - t : h;

    const double coarse = rk4_step(y, step);
    const double half = rk4_step(y, 0.5 * step);
    const double fine = rk4_step(half, 0.5 * step);
    const double err = std::fabs(fine - coarse) / 15.0;
    const double scale = std::max(std::fabs(fine), 1e-300);

    if (!std::isfinite(fine) || err > local_tol * scale) {
      h = 0.5 * step;
      if (h < h_min) {
        throw SingularityError("step size underflow near t = " + std::to_string(t), t);
      }
      continue;
    }

    y = fine + (fine - coarse) / 15.0;
    check_bounded(y, t + step, options);
    t = last ? t_end : t + step;

    // Grow conservatively; the error estimate scales like h^5.
    const double ratio = err == 0.0 ? 2.0 : std::pow(local_tol * scale / err, 0.2) * 0.9;
    h = step * std::clamp(ratio, 0.5, 2.0);
  }
  return y;
}

std::vector<double> integrate_grid(double x0, const std::vector<double>& grid, double local_tol,
                                   const NumericOptions& options) {
  std::vector<double> values(grid.size());
  values[0] = x0;
  double h = (grid.size() > 1 ? grid[1] - grid[0] : 1.0) * 1e-3;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    values[i] = integrate_interval(values[i - 1], grid[i - 1], grid[i], local_tol, h, options);
  }
  return values;
}

}  // namespace

LogisticSolution LogisticSolution::through(double t0, double x0) {
  if (!std::isfinite(t0)) throw DomainError("t0", "must be finite");
  if (!std::isfinite(x0)) throw DomainError("x0", "must be finite");
  if (x0 < 0.0) throw DomainError("x0", "must be non-negative");
  const double c = x0 == 0.0 ? std::numeric_limits<double>::infinity() : (1.0 - x0) / x0;
  return {t0, x0, c};
}

double LogisticSolution::log_abs_unshifted_constant() const {
  return t0 + std::log(std::fabs(c_const));
}

double base_logistic_analytic(const LogisticSolution& init, double t) {
  const double x0 = init.x0;
  if (!(x0 >= 0.0) || !std::isfinite(x0)) throw DomainError("x0", "must be non-negative");
  if (!std::isfinite(t)) throw DomainError("t", "must be finite");
  if (x0 == 0.0 || x0 == 1.0) return x0;

  const double s = t - init.t0;
  if (x0 > 1.0) {
    const double pole = std::log1p(-1.0 / x0);
    if (s <= pole) {
      throw SingularityError("closed form has a pole at t = " + std::to_string(init.t0 + pole),
                             init.t0 + pole);
    }
  }
  // x0 / (x0 + (1 - x0) e^-s) is the same expression as e^s / (c + e^s) but
  // never forms e^s for large forward horizons.
  return x0 / (x0 + (1.0 - x0) * std::exp(-s));
}

std::vector<double> make_grid(double t0, double t1, double step) {
  if (!std::isfinite(t0)) throw DomainError("t0", "must be finite");
  if (!std::isfinite(t1) || !(t1 > t0)) throw DomainError("t1", "must be greater than t0");
  if (!std::isfinite(step) || !(step > 0.0)) throw DomainError("step", "must be positive");

  const double intervals = (t1 - t0) / step;
  const auto n = static_cast<std::size_t>(std::ceil(intervals - 1e-9));
  std::vector<double> grid;
  grid.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) grid.push_back(t0 + static_cast<double>(i) * step);
  grid.push_back(t1);
  return grid;
}

Trajectory base_logistic_numeric(double x0, double t0, double t1, double step,
                                 const NumericOptions& options) {
  if (!std::isfinite(x0) || x0 < 0.0) throw DomainError("x0", "must be non-negative");
  if (!(options.rel_tol > 0.0)) throw DomainError("rel_tol", "must be positive");
  Trajectory out;
  out.times = make_grid(t0, t1, step);
  check_bounded(x0, t0, options);

  double local_tol = options.rel_tol * 1e-2;
  std::vector<double> previous = integrate_grid(x0, out.times, local_tol, options);
  for (int r = 0; r < options.max_refinements; ++r) {
    local_tol /= 16.0;
    std::vector<double> current = integrate_grid(x0, out.times, local_tol, options);
    double worst = 0.0;
    for (std::size_t i = 0; i < current.size(); ++i) {
      const double scale = std::max(std::fabs(current[i]), 1e-300);
      worst = std::max(worst, std::fabs(current[i] - previous[i]) / scale);
    }
    if (worst <= options.rel_tol) {
      out.values = std::move(current);
      return out;
    }
    previous = std::move(current);
  }
  throw NumericError("logistic integration did not converge after refinement");
}

}  // namespace fiscalstab::effectiveness
