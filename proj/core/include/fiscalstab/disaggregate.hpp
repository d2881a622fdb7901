#pragma once

#include <array>

namespace fiscalstab::disagg {

/// One cyclically sensitive revenue category and its output elasticity.
struct RevenueCategory {
  double amount = 0.0;
  double elasticity = 0.0;
};

/// Category order is fixed: t1 personal income tax, t2 corporate income tax,
/// t3 social contributions, t4 parafiscal levies.
///
/// Unemployment may be a rate or a head count; only u_structural / u_current
/// enters the computation, so the two just have to share units.
struct DisaggregateInputs {
  std::array<RevenueCategory, 4> revenues{};
  double expenditure = 0.0;             // unemployment-sensitive spending C
  double expenditure_elasticity = 0.0;  // w.r.t. unemployment
  double x_term = 0.0;                  // non-fiscal revenue net of capital spending
  double y_current = 0.0;
  double y_potential = 0.0;
  double u_current = 0.0;
  double u_structural = 0.0;
};

void validate(const DisaggregateInputs& in);

/// T (Yp/Y)^e
double adjust_revenue_category(double amount, double elasticity, double y_current,
                               double y_potential);

/// C (U*/U)^e
double adjust_expenditure_unemployment(double expenditure, double elasticity,
                                       double u_structural, double u_current);

/// Currency-level structural balance: sum of adjusted categories minus
/// adjusted expenditure plus X.
double structural_balance_disaggregate_level(const DisaggregateInputs& in);

/// The level above divided by potential GDP.
double structural_balance_disaggregate(const DisaggregateInputs& in);

}  // namespace fiscalstab::disagg
