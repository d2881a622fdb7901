#pragma once

#include <span>
#include <vector>

#include "fiscalstab/logistic.hpp"

namespace fiscalstab::effectiveness {

/// E = -K B
double effectiveness(double k, double b);

/// Slope dK/dB = -K/B of the iso-effectiveness curve through (B, K).
double marginal_rate_substitution(double k, double b);

/// K = c / B, the rate that keeps K B = c.
double rate_from_base(double c, double b);

/// Right-hand side E (1 - E) of the logistic law for E. Peaks at E = 1/2.
double effectiveness_logistic_rhs(double e);

struct EffectivenessPath {
  std::vector<double> times;
  std::vector<double> base;
  std::vector<double> rate;
  std::vector<double> effectiveness;
};

/// Equal lengths, strictly increasing times, positive base,
/// effectiveness == -rate * base.
void validate(const EffectivenessPath& path);

/// Couples K(t) = c / B(t).
struct RateFromBase {
  double c = 1.0;
};

/// E(t) = -K(t) B(t) with B from the closed-form logistic solution.
EffectivenessPath effectiveness_trajectory(std::span<const double> k_samples,
                                           const LogisticSolution& init,
                                           std::span<const double> grid);
EffectivenessPath effectiveness_trajectory(RateFromBase coupling, const LogisticSolution& init,
                                           std::span<const double> grid);

enum class OptimumKind { maximum, minimum, inconclusive };

struct Optimum {
  double time = 0.0;
  double value = 0.0;
  double second_derivative = 0.0;
  OptimumKind kind = OptimumKind::inconclusive;
};

struct OptimumSearchResult {
  /// E is constant on the grid: every point is stationary, none is isolated.
  bool degenerate = false;
  std::vector<Optimum> optima;
};

struct OptimumSearchOptions {
  double curvature_tol = 1e-9;
  double constant_rel_tol = 1e-12;
};

/// Finds zeros of the finite-difference dE/dt, refines each by bisection on
/// the piecewise-linear interpolant of the derivative samples and classifies
/// it by the interpolated finite-difference d2E/dt2. Needs at least 5 samples.
OptimumSearchResult optimum_search(const EffectivenessPath& path,
                                   const OptimumSearchOptions& options = {});

struct OptimalitySample {
  double time = 0.0;
  double rate = 0.0;
  /// exp(-integral of C / (C + e^t) from the first grid point), which the
  /// normalised rate K(t) / K(t_first) has to match.
  double expected_rate_ratio = 0.0;
  bool rate_condition = false;
  /// d2E/dt2 assembled from K, K', K'' and the logistic base.
  double curvature = 0.0;
  bool curvature_condition = false;  // curvature < 0
};

/// Checks the rate-profile and curvature optimality conditions sample by
/// sample. `c_const` is the logistic constant relative to e^(t - t_ref)
/// (see LogisticSolution). K', K'' come from grid finite differences.
/// Throws NumericError when the quadrature fails, e.g. across the pole
/// C + e^t = 0.
std::vector<OptimalitySample> optimality_condition_check(std::span<const double> k_samples,
                                                         double c_const, double t_ref,
                                                         std::span<const double> grid,
                                                         double rel_tol = 1e-6,
                                                         double quad_abs_tol = 1e-9);

const char* to_string(OptimumKind kind);

}  // namespace fiscalstab::effectiveness
