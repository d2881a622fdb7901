#pragma once

#include <array>

namespace fiscalstab::volatility {

/// Parameters of Vol = K B |N - M|.
///
/// N = |Va - Vp| and M = |Ca - Cp| are the revenue and expenditure gaps
/// between current and potential activity. Differentiation is carried out in
/// the cube-root coordinates K* = cbrt(K), b = cbrt(B).
struct VolParams {
  double k_rate = 0.0;
  double b_base = 0.0;
  double n_term = 0.0;
  double m_term = 0.0;

  static VolParams from_cube_roots(double k_star, double b, double n, double m) {
    return {k_star * k_star * k_star, b * b * b, n, m};
  }
};

/// (dVol/dK*, dVol/db)
using Gradient = std::array<double, 2>;

/// Row-major 2x2, symmetric by construction.
using Hessian = std::array<std::array<double, 2>, 2>;

enum class DefinitenessSign { positive, zero, negative, indefinite };

struct StationaryReport {
  Gradient gradient{};
  Hessian hessian{};
  bool is_stationary = false;
  DefinitenessSign second_differential_sign = DefinitenessSign::zero;
  /// N == M: Vol vanishes identically and every point is trivially stationary.
  bool degenerate = false;
};

void validate(const VolParams& p);

double k_star(const VolParams& p);
double b_root(const VolParams& p);

double vol_value(const VolParams& p);

/// |Y - Yp| - K B ||N| - |M||; zero when the equilibrium identity holds.
double equilibrium_residual(double y_current, double y_potential, const VolParams& p);

/// Analytic partials in (K*, b). Throws NonDifferentiableError at N == M.
Gradient vol_gradient(const VolParams& p);

/// Central-difference estimate of vol_gradient() with step rel_step * max(|x|, 1)
/// per coordinate. Used by the CLI as a self-check of the analytic partials.
Gradient vol_gradient_central_difference(const VolParams& p, double rel_step = 1e-6);

/// Analytic second partials in (K*, b). Throws NonDifferentiableError at N == M.
Hessian vol_hessian(const VolParams& p);

/// Two literal readings of the chain-rule gradient written in terms of time
/// derivatives along a trajectory (K*(t), b(t)):
///   inverse_rate:       dVol/dt / (dK*/dt),    dVol/dt / (db/dt)
///   cube_multiplier:    dVol/dt * 3 K*^2,      dVol/dt * 3 b^2
/// The two disagree in general and neither equals vol_gradient() unless the
/// other coordinate is frozen along the trajectory. inverse_rate is the
/// mathematically sound one for that case.
struct ChainRuleForms {
  Gradient inverse_rate{};
  Gradient cube_multiplier{};
};

/// Throws DomainError when either time derivative is zero.
ChainRuleForms vol_gradient_paper_form(const VolParams& p, double dvol_dt, double dk_dt,
                                       double db_dt);

/// Sign of a symmetric 2x2 form. Eigenvalues within `tol` of zero count as zero.
DefinitenessSign definiteness(const Hessian& h, double tol);

StationaryReport classify_stationary(const VolParams& p, double stationarity_tol = 1e-9);

const char* to_string(DefinitenessSign sign);

}  // namespace fiscalstab::volatility
