#include "fiscalstab/balance.hpp"

#include <cmath>

#include "fiscalstab/error.hpp"

namespace fiscalstab::balance {
namespace {

void require_finite(double value, const char* field) {
  if (!std::isfinite(value)) throw DomainError(field, "must be finite");
}

double checked(double value, const char* what) {
  if (!std::isfinite(value)) throw NumericError(std::string(what) + " is not finite");
  return value;
}

}  // namespace

void validate(const FiscalObservation& obs) {
  require_finite(obs.y_current, "y_current");
  require_finite(obs.y_potential, "y_potential");
  require_finite(obs.revenue, "revenue");
  require_finite(obs.expenditure, "expenditure");
  if (obs.y_current <= 0.0) throw DomainError("y_current", "must be positive");
  if (obs.y_potential <= 0.0) throw DomainError("y_potential", "must be positive");
  if (obs.revenue < 0.0) throw DomainError("revenue", "must be non-negative");
  if (obs.expenditure < 0.0) throw DomainError("expenditure", "must be non-negative");
}

void validate(const Elasticities& el) {
  require_finite(el.epsilon_v, "epsilon_v");
  require_finite(el.epsilon_c, "epsilon_c");
}

double output_gap(const FiscalObservation& obs) {
  validate(obs);
  return (obs.y_current - obs.y_potential) / obs.y_potential;
}

double conventional_balance(const FiscalObservation& obs) {
  validate(obs);
  return obs.revenue - obs.expenditure;
}

double structural_balance_aggregate(const FiscalObservation& obs, const Elasticities& el) {
  validate(obs);
  validate(el);
  const double ratio = obs.y_potential / obs.y_current;
  const double revenue = obs.revenue * std::pow(ratio, el.epsilon_v);
  const double spending = obs.expenditure * std::pow(ratio, el.epsilon_c);
  return checked(revenue - spending, "structural balance");
}

double cyclical_balance(const FiscalObservation& obs, const Elasticities& el) {
  return conventional_balance(obs) - structural_balance_aggregate(obs, el);
}

BalanceDecomposition decompose(const FiscalObservation& obs, const Elasticities& el) {
  BalanceDecomposition d;
  d.sbc = conventional_balance(obs);
  d.sbs = structural_balance_aggregate(obs, el);
  d.sbc_cyclical = d.sbc - d.sbs;
  return d;
}

CyclicalClosedForms cyclical_closed_forms(const FiscalObservation& obs) {
  validate(obs);
  const double ratio = obs.y_potential / obs.y_current;
  const double gap = (obs.y_current - obs.y_potential) / obs.y_potential;
  return {obs.revenue * (1.0 - ratio),
          (obs.revenue / obs.y_current) * obs.y_potential * gap};
}

double sfa_from_deltas(double delta_sbc, double delta_sbs) {
  require_finite(delta_sbc, "delta_sbc");
  require_finite(delta_sbs, "delta_sbs");
  return delta_sbc - delta_sbs;
}

ComplianceVerdict fp_compliance(const BalanceDecomposition& decomp, double y_current,
                                double debt_ratio, const ComplianceThresholds& thresholds) {
  require_finite(y_current, "y_current");
  require_finite(debt_ratio, "debt_ratio");
  if (y_current <= 0.0) throw DomainError("y_current", "must be positive");
  if (debt_ratio < 0.0) throw DomainError("debt_ratio", "must be non-negative");

  ComplianceVerdict v;
  v.deficit_ratio = decomp.sbc / y_current;
  v.structural_ratio = decomp.sbs / y_current;
  v.debt_ratio = debt_ratio;
  v.structural_limit_applied = debt_ratio < thresholds.relaxation_debt_ratio
                                   ? thresholds.structural_limit_relaxed
                                   : thresholds.structural_limit;
  v.deficit_ok = v.deficit_ratio >= -thresholds.deficit_ceiling;
  v.structural_ok = std::fabs(v.structural_ratio) <= v.structural_limit_applied;
  return v;
}

}  // namespace fiscalstab::balance
