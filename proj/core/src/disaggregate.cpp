#include "fiscalstab/disaggregate.hpp"

#include <cmath>
#include <string>

#include "fiscalstab/error.hpp"

namespace fiscalstab::disagg {
namespace {

void require_positive(double value, const std::string& field) {
  if (!std::isfinite(value)) throw DomainError(field, "must be finite");
  if (value <= 0.0) throw DomainError(field, "must be positive");
}

void require_non_negative(double value, const std::string& field) {
  if (!std::isfinite(value)) throw DomainError(field, "must be finite");
  if (value < 0.0) throw DomainError(field, "must be non-negative");
}

void require_finite(double value, const std::string& field) {
  if (!std::isfinite(value)) throw DomainError(field, "must be finite");
}

}  // namespace

void validate(const DisaggregateInputs& in) {
  for (std::size_t i = 0; i < in.revenues.size(); ++i) {
    const std::string n = std::to_string(i + 1);
    require_non_negative(in.revenues[i].amount, "t" + n);
    require_finite(in.revenues[i].elasticity, "eps_t" + n);
  }
  require_non_negative(in.expenditure, "expenditure");
  require_finite(in.expenditure_elasticity, "eps_c_u");
  require_finite(in.x_term, "x_term");
  require_positive(in.y_current, "y_current");
  require_positive(in.y_potential, "y_potential");
  require_positive(in.u_current, "u_current");
  require_positive(in.u_structural, "u_structural");
}

double adjust_revenue_category(double amount, double elasticity, double y_current,
                               double y_potential) {
  require_positive(y_current, "y_current");
  require_positive(y_potential, "y_potential");
  require_non_negative(amount, "amount");
  require_finite(elasticity, "elasticity");
  return amount * std::pow(y_potential / y_current, elasticity);
}

double adjust_expenditure_unemployment(double expenditure, double elasticity,
                                       double u_structural, double u_current) {
  require_positive(u_current, "u_current");
  require_positive(u_structural, "u_structural");
  require_non_negative(expenditure, "expenditure");
  require_finite(elasticity, "elasticity");
  return expenditure * std::pow(u_structural / u_current, elasticity);
}

double structural_balance_disaggregate_level(const DisaggregateInputs& in) {
  validate(in);
  double revenue = 0.0;
  for (const auto& cat : in.revenues) {
    revenue += adjust_revenue_category(cat.amount, cat.elasticity, in.y_current,
                                       in.y_potential);
  }
  const double spending = adjust_expenditure_unemployment(
      in.expenditure, in.expenditure_elasticity, in.u_structural, in.u_current);
  const double level = revenue - spending + in.x_term;
  if (!std::isfinite(level)) throw NumericError("disaggregate structural balance is not finite");
  return level;
}

double structural_balance_disaggregate(const DisaggregateInputs& in) {
  const double ratio = structural_balance_disaggregate_level(in) / in.y_potential;
  if (!std::isfinite(ratio)) throw NumericError("disaggregate structural ratio is not finite");
  return ratio;
}

}  // namespace fiscalstab::disagg
