#include "fiscalstab/effectiveness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fiscalstab/error.hpp"
#include "fiscalstab/numerics.hpp"

namespace fiscalstab::effectiveness {
namespace {

void require_finite(double value, const char* field) {
  if (!std::isfinite(value)) throw DomainError(field, "must be finite");
}

std::vector<double> base_on_grid(const LogisticSolution& init, std::span<const double> grid) {
  std::vector<double> base;
  base.reserve(grid.size());
  for (const double t : grid) {
    const double b = base_logistic_analytic(init, t);
    if (!(b > 0.0)) {
      throw DomainError("base", "logistic base must stay positive, got " + std::to_string(b));
    }
    base.push_back(b);
  }
  return base;
}

EffectivenessPath assemble(std::span<const double> grid, std::vector<double> base,
                           std::vector<double> rate) {
  EffectivenessPath path;
  path.times.assign(grid.begin(), grid.end());
  path.base = std::move(base);
  path.rate = std::move(rate);
  path.effectiveness.resize(path.times.size());
  for (std::size_t i = 0; i < path.times.size(); ++i) {
    path.effectiveness[i] = effectiveness(path.rate[i], path.base[i]);
  }
  return path;
}

int sign(double x) { return (x > 0.0) - (x < 0.0); }

double lerp(double a, double b, double w) { return a + (b - a) * w; }

}  // namespace

double effectiveness(double k, double b) {
  require_finite(k, "k");
  require_finite(b, "b");
  return -k * b;
}

double marginal_rate_substitution(double k, double b) {
  require_finite(k, "k");
  require_finite(b, "b");
  if (b == 0.0) throw DomainError("b", "must be non-zero");
  return -k / b;
}

double rate_from_base(double c, double b) {
  require_finite(c, "c");
  require_finite(b, "b");
  if (c == 0.0) throw DomainError("c", "must be non-zero");
  if (b == 0.0) throw DomainError("b", "must be non-zero");
  return c / b;
}

double effectiveness_logistic_rhs(double e) {
  require_finite(e, "e");
  return e * (1.0 - e);
}

void validate(const EffectivenessPath& path) {
  const std::size_t n = path.times.size();
  if (path.base.size() != n || path.rate.size() != n || path.effectiveness.size() != n) {
    throw DomainError("path", "sample vectors differ in length");
  }
  numerics::require_grid(path.times, path.effectiveness, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(path.base[i] > 0.0)) throw DomainError("base", "samples must be positive");
    const double expected = -path.rate[i] * path.base[i];
    const double scale = std::max(std::fabs(expected), std::fabs(path.effectiveness[i]));
    if (std::fabs(path.effectiveness[i] - expected) > 1e-12 * scale) {
      throw DomainError("effectiveness", "sample " + std::to_string(i) + " != -rate * base");
    }
  }
}

EffectivenessPath effectiveness_trajectory(std::span<const double> k_samples,
                                           const LogisticSolution& init,
                                           std::span<const double> grid) {
  numerics::require_grid(grid, k_samples, 1);
  for (const double k : k_samples) require_finite(k, "k");
  return assemble(grid, base_on_grid(init, grid),
                  std::vector<double>(k_samples.begin(), k_samples.end()));
}

EffectivenessPath effectiveness_trajectory(RateFromBase coupling, const LogisticSolution& init,
                                           std::span<const double> grid) {
  numerics::require_grid(grid, grid, 1);
  auto base = base_on_grid(init, grid);
  std::vector<double> rate;
  rate.reserve(base.size());
  for (const double b : base) rate.push_back(rate_from_base(coupling.c, b));
  return assemble(grid, std::move(base), std::move(rate));
}

OptimumSearchResult optimum_search(const EffectivenessPath& path,
                                   const OptimumSearchOptions& options) {
  if (path.times.size() < 5) throw InputError("optimum search needs at least 5 samples");
  validate(path);

  const auto& t = path.times;
  const auto& e = path.effectiveness;
  OptimumSearchResult result;

  const double reference = e.front();
  double spread = 0.0;
  for (const double v : e) spread = std::max(spread, std::fabs(v - reference));
  if (spread <= options.constant_rel_tol * std::max(1.0, std::fabs(reference))) {
    result.degenerate = true;
    return result;
  }

  const auto d1 = numerics::first_derivative(t, e);
  const auto d2 = numerics::second_derivative(t, e);

  auto classify = [&](double curvature) {
    if (std::fabs(curvature) < options.curvature_tol) return OptimumKind::inconclusive;
    return curvature < 0.0 ? OptimumKind::maximum : OptimumKind::minimum;
  };
  auto value_at = [&](std::size_t i, double w) { return lerp(e[i], e[i + 1], w); };

  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    // A derivative sample that is exactly zero between samples of opposite
    // sign is itself the root.
    if (d1[i] == 0.0) {
      if (i > 0 && sign(d1[i - 1]) * sign(d1[i + 1]) < 0) {
        result.optima.push_back({t[i], e[i], d2[i], classify(d2[i])});
      }
      continue;
    }
    if (sign(d1[i]) * sign(d1[i + 1]) >= 0) continue;

    // Bisection on the linear interpolant of dE/dt over [t_i, t_{i+1}].
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double g = lerp(d1[i], d1[i + 1], mid);
      if (sign(g) == sign(d1[i])) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double w = 0.5 * (lo + hi);
    const double curvature = lerp(d2[i], d2[i + 1], w);
    result.optima.push_back({lerp(t[i], t[i + 1], w), value_at(i, w), curvature,
                             classify(curvature)});
  }
  return result;
}

std::vector<OptimalitySample> optimality_condition_check(std::span<const double> k_samples,
                                                         double c_const, double t_ref,
                                                         std::span<const double> grid,
                                                         double rel_tol, double quad_abs_tol) {
  numerics::require_grid(grid, k_samples, 3);
  require_finite(c_const, "c_const");
  require_finite(t_ref, "t_ref");
  for (const double k : k_samples) require_finite(k, "k");
  if (k_samples.front() == 0.0) throw DomainError("k", "first rate sample must be non-zero");

  const auto dk = numerics::first_derivative(grid, k_samples);
  const auto ddk = numerics::second_derivative(grid, k_samples);
  const auto integrand = [c_const, t_ref](double tau) {
    const double denom = c_const + std::exp(tau - t_ref);
    if (denom == 0.0) return std::numeric_limits<double>::infinity();
    return c_const / denom;
  };

  std::vector<OptimalitySample> out(grid.size());
  double integral = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) {
      integral += numerics::integrate_adaptive(integrand, grid[i - 1], grid[i], quad_abs_tol);
    }
    auto& s = out[i];
    s.time = grid[i];
    s.rate = k_samples[i];
    s.expected_rate_ratio = std::exp(-integral);
    const double ratio = k_samples[i] / k_samples.front();
    s.rate_condition =
        std::fabs(ratio - s.expected_rate_ratio) <= rel_tol * std::fabs(s.expected_rate_ratio);

    // Every term is homogeneous of degree 4 in (C, e^t), so the shifted
    // constant and exponential give the same value as the unshifted ones.
    const double x = std::exp(grid[i] - t_ref);
    const double c = c_const;
    const double k = k_samples[i];
    const double k1 = dk[i];
    const double k2 = ddk[i];
    const double sum = c + x;
    const double first = (-c * k2 * x - 2.0 * c * k1 * x - k2 * x * x - 2.0 * k1 * x * x -
                          k * c * x) * sum * sum;
    const double second = (c * k1 * x + k1 * x * x + k * c * x) * 2.0 * sum * x;
    s.curvature = (first + second) / (sum * sum * sum * sum);
    if (!std::isfinite(s.curvature)) {
      throw NumericError("curvature expression is not finite at t = " + std::to_string(grid[i]));
    }
    s.curvature_condition = s.curvature < 0.0;
  }
  return out;
}

const char* to_string(OptimumKind kind) {
  switch (kind) {
    case OptimumKind::maximum: return "maximum";
    case OptimumKind::minimum: return "minimum";
    case OptimumKind::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace fiscalstab::effectiveness
