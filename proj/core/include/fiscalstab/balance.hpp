#pragma once

// Aggregate-method budget balance decomposition.
//
// All amounts are in one currency unit (e.g. million lei). Balances are
// signed: a deficit is negative.

namespace fiscalstab::balance {

struct FiscalObservation {
  int period = 0;
  double y_current = 0.0;    // Y
  double y_potential = 0.0;  // Yp
  double revenue = 0.0;      // V
  double expenditure = 0.0;  // C
};

/// Elasticities of revenue and expenditure with respect to the cycle.
/// Defaults are the "revenue fully cyclical, spending acyclical" case.
struct Elasticities {
  double epsilon_v = 1.0;
  double epsilon_c = 0.0;
};

struct BalanceDecomposition {
  double sbc = 0.0;           // conventional
  double sbs = 0.0;           // structural
  double sbc_cyclical = 0.0;  // cyclical, always sbc - sbs
};

struct ComplianceThresholds {
  double deficit_ceiling = 0.03;
  double structural_limit = 0.005;
  double structural_limit_relaxed = 0.01;
  double relaxation_debt_ratio = 0.60;
};

/// Deficit rule is closed at the ceiling: deficit_ratio == -ceiling passes.
/// Structural rule is closed at the limit. The relaxed limit applies only when
/// debt_ratio is strictly below the relaxation threshold.
struct ComplianceVerdict {
  double deficit_ratio = 0.0;
  double structural_ratio = 0.0;
  double debt_ratio = 0.0;
  double structural_limit_applied = 0.0;
  bool deficit_ok = false;
  bool structural_ok = false;
};

/// Throws DomainError naming the first field that violates the invariants.
void validate(const FiscalObservation& obs);
void validate(const Elasticities& el);

double output_gap(const FiscalObservation& obs);

double conventional_balance(const FiscalObservation& obs);

/// V (Yp/Y)^ev - C (Yp/Y)^ec.
double structural_balance_aggregate(const FiscalObservation& obs, const Elasticities& el);

/// Residual conventional - structural, so the decomposition is additive.
double cyclical_balance(const FiscalObservation& obs, const Elasticities& el);

BalanceDecomposition decompose(const FiscalObservation& obs, const Elasticities& el);

/// Closed forms of the cyclical balance for ev = 1, ec = 0. Both must agree
/// with cyclical_balance(); they are cross-checks, not the computation path.
struct CyclicalClosedForms {
  double revenue_form = 0.0;  // V (1 - Yp/Y)
  double gap_form = 0.0;      // (V/Y) Yp gap
};
CyclicalClosedForms cyclical_closed_forms(const FiscalObservation& obs);

/// Change in the cyclical balance attributable to automatic stabilisers.
double sfa_from_deltas(double delta_sbc, double delta_sbs);

ComplianceVerdict fp_compliance(const BalanceDecomposition& decomp, double y_current,
                                double debt_ratio,
                                const ComplianceThresholds& thresholds = {});

}  // namespace fiscalstab::balance
