#include "fiscalstab/volatility.hpp"

#include <algorithm>
#include <cmath>

#include "fiscalstab/error.hpp"

namespace fiscalstab::volatility {
namespace {

void require_non_negative(double value, const char* field) {
  if (!std::isfinite(value)) throw DomainError(field, "must be finite");
  if (value < 0.0) throw DomainError(field, "must be non-negative");
}

double spread(const VolParams& p) { return std::fabs(p.n_term - p.m_term); }

void require_differentiable(const VolParams& p) {
  if (p.n_term == p.m_term) {
    throw NonDifferentiableError(
        "n_term", "|N - M| has a kink at N == M; evaluate vol_value instead");
  }
}

// libm cbrt is not correctly rounded (cbrt(27) != 3); one Newton step fixes
// exact cubes and costs nothing elsewhere.
double cube_root(double x) {
  const double r = std::cbrt(x);
  if (r == 0.0 || !std::isfinite(r)) return r;
  return r - (r * r * r - x) / (3.0 * r * r);
}

}  // namespace

void validate(const VolParams& p) {
  require_non_negative(p.k_rate, "k_rate");
  require_non_negative(p.b_base, "b_base");
  require_non_negative(p.n_term, "n_term");
  require_non_negative(p.m_term, "m_term");
}

double k_star(const VolParams& p) { return cube_root(p.k_rate); }
double b_root(const VolParams& p) { return cube_root(p.b_base); }

double vol_value(const VolParams& p) {
  validate(p);
  return p.k_rate * p.b_base * spread(p);
}

double equilibrium_residual(double y_current, double y_potential, const VolParams& p) {
  validate(p);
  if (!std::isfinite(y_current)) throw DomainError("y_current", "must be finite");
  if (!std::isfinite(y_potential)) throw DomainError("y_potential", "must be finite");
  const double gap = std::fabs(y_current - y_potential);
  return gap - p.k_rate * p.b_base * std::fabs(std::fabs(p.n_term) - std::fabs(p.m_term));
}

Gradient vol_gradient(const VolParams& p) {
  validate(p);
  require_differentiable(p);
  const double ks = k_star(p);
  const double b = b_root(p);
  const double d = spread(p);
  return {3.0 * ks * ks * b * b * b * d, 3.0 * ks * ks * ks * b * b * d};
}

Gradient vol_gradient_central_difference(const VolParams& p, double rel_step) {
  validate(p);
  require_differentiable(p);
  const double ks = k_star(p);
  const double b = b_root(p);
  auto vol_at = [&p](double kk, double bb) {
    return kk * kk * kk * bb * bb * bb * spread(p);
  };
  const double hk = rel_step * std::max(std::fabs(ks), 1.0);
  const double hb = rel_step * std::max(std::fabs(b), 1.0);
  return {(vol_at(ks + hk, b) - vol_at(ks - hk, b)) / (2.0 * hk),
          (vol_at(ks, b + hb) - vol_at(ks, b - hb)) / (2.0 * hb)};
}

Hessian vol_hessian(const VolParams& p) {
  validate(p);
  require_differentiable(p);
  const double ks = k_star(p);
  const double b = b_root(p);
  const double d = spread(p);
  const double mixed = 9.0 * ks * ks * b * b * d;
  return {{{6.0 * ks * b * b * b * d, mixed}, {mixed, 6.0 * ks * ks * ks * b * d}}};
}

ChainRuleForms vol_gradient_paper_form(const VolParams& p, double dvol_dt, double dk_dt,
                                       double db_dt) {
  validate(p);
  if (!std::isfinite(dvol_dt)) throw DomainError("dvol_dt", "must be finite");
  if (!std::isfinite(dk_dt) || dk_dt == 0.0) throw DomainError("dk_dt", "must be finite and non-zero");
  if (!std::isfinite(db_dt) || db_dt == 0.0) throw DomainError("db_dt", "must be finite and non-zero");
  const double ks = k_star(p);
  const double b = b_root(p);
  ChainRuleForms out;
  out.inverse_rate = {dvol_dt / dk_dt, dvol_dt / db_dt};
  out.cube_multiplier = {dvol_dt * 3.0 * ks * ks, dvol_dt * 3.0 * b * b};
  return out;
}

DefinitenessSign definiteness(const Hessian& h, double tol) {
  const double a = h[0][0];
  const double c = h[1][1];
  const double off = h[0][1];
  const double mean = 0.5 * (a + c);
  const double radius = std::hypot(0.5 * (a - c), off);
  const double lo = mean - radius;
  const double hi = mean + radius;

  if (std::fabs(lo) <= tol && std::fabs(hi) <= tol) return DefinitenessSign::zero;
  if (lo >= -tol) return DefinitenessSign::positive;
  if (hi <= tol) return DefinitenessSign::negative;
  return DefinitenessSign::indefinite;
}

StationaryReport classify_stationary(const VolParams& p, double stationarity_tol) {
  validate(p);
  if (!(stationarity_tol > 0.0)) throw DomainError("stationarity_tol", "must be positive");

  StationaryReport r;
  if (p.n_term == p.m_term) {
    r.degenerate = true;
    r.is_stationary = true;
    r.second_differential_sign = DefinitenessSign::zero;
    return r;
  }
  r.gradient = vol_gradient(p);
  r.hessian = vol_hessian(p);
  r.is_stationary = std::fabs(r.gradient[0]) <= stationarity_tol &&
                    std::fabs(r.gradient[1]) <= stationarity_tol;
  r.second_differential_sign = definiteness(r.hessian, stationarity_tol);
  return r;
}

const char* to_string(DefinitenessSign sign) {
  switch (sign) {
    case DefinitenessSign::positive: return "positive";
    case DefinitenessSign::zero: return "zero";
    case DefinitenessSign::negative: return "negative";
    case DefinitenessSign::indefinite: return "indefinite";
  }
  return "?";
}

}  // namespace fiscalstab::volatility
