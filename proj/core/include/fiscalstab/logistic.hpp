#pragma once

#include <vector>

namespace fiscalstab::effectiveness {

/// Solution of dB/dt = B (1 - B) through (t0, x0), written as
///
///     B(t) = e^(t - t0) / (c_const + e^(t - t0)),   c_const = (1 - x0) / x0.
///
/// The constant is relative to e^(t - t0): the unshifted form e^t / (C + e^t)
/// has C = c_const * e^t0, which overflows a double for calendar-year times.
/// Use log_abs_unshifted_constant() when C itself is needed.
struct LogisticSolution {
  double t0 = 0.0;
  double x0 = 0.5;
  double c_const = 1.0;

  /// Throws DomainError for negative or non-finite x0. x0 == 0 is the
  /// trivial fixed point and yields c_const = +inf.
  static LogisticSolution through(double t0, double x0);

  /// log |C| = t0 + log |c_const|; -inf when x0 == 1.
  double log_abs_unshifted_constant() const;
};

/// Closed form at time t. For x0 > 1 the closed form has a pole at
/// t0 + log(1 - 1/x0); evaluating at or before it throws SingularityError
/// carrying that time.
double base_logistic_analytic(const LogisticSolution& init, double t);

struct Trajectory {
  std::vector<double> times;
  std::vector<double> values;
};

struct NumericOptions {
  double rel_tol = 1e-8;     // agreement required between successive refinements
  double blow_up = 1e12;     // |B| beyond this is treated as divergence
  int max_refinements = 8;
};

/// Classical fourth-order Runge-Kutta on the grid t0, t0 + step, ..., t1 (the
/// last interval may be shorter). Inside each grid interval the step is chosen
/// by step doubling; the whole integration is repeated with a tolerance 16x
/// tighter until two successive runs agree to rel_tol at every grid point.
Trajectory base_logistic_numeric(double x0, double t0, double t1, double step,
                                 const NumericOptions& options = {});

/// Grid t0, t0 + step, ..., t1 used by base_logistic_numeric.
std::vector<double> make_grid(double t0, double t1, double step);

}  // namespace fiscalstab::effectiveness
