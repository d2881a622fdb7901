#include "fiscalstab/disaggregate.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fiscalstab/balance.hpp"
#include "fiscalstab/error.hpp"

namespace fd = fiscalstab::disagg;

namespace {

fd::DisaggregateInputs sample() {
  fd::DisaggregateInputs in;
  for (auto& r : in.revenues) r = {10.0, 1.0};
  in.expenditure = 20.0;
  in.expenditure_elasticity = 1.0;
  in.x_term = 0.0;
  in.y_current = 105.0;
  in.y_potential = 100.0;
  in.u_current = 5.0;
  in.u_structural = 4.0;
  return in;
}

}  // namespace

TEST(AdjustRevenue, Examples) {
  EXPECT_EQ(fd::adjust_revenue_category(10, 0, 105, 100), 10.0);
  EXPECT_NEAR(fd::adjust_revenue_category(10, 1, 105, 100), 9.523809523809523810, 1e-14);
  EXPECT_EQ(fd::adjust_revenue_category(10, 2, 100, 100), 10.0);
  EXPECT_THROW(fd::adjust_revenue_category(10, 1, 0, 100), fiscalstab::DomainError);
  EXPECT_THROW(fd::adjust_revenue_category(10, 1, 100, -1), fiscalstab::DomainError);
}

TEST(AdjustExpenditure, Examples) {
  EXPECT_EQ(fd::adjust_expenditure_unemployment(20, 0, 4, 5), 20.0);
  EXPECT_DOUBLE_EQ(fd::adjust_expenditure_unemployment(20, 1, 4, 5), 16.0);
  EXPECT_EQ(fd::adjust_expenditure_unemployment(20, 3.7, 5, 5), 20.0);
  EXPECT_THROW(fd::adjust_expenditure_unemployment(20, 1, 4, 0), fiscalstab::DomainError);
  EXPECT_THROW(fd::adjust_expenditure_unemployment(20, 1, 0, 5), fiscalstab::DomainError);
}

TEST(DisaggregateBalance, HandEvaluated) {
  // (40 * 100/105 - 16) / 100 in 40-digit arithmetic.
  EXPECT_NEAR(fd::structural_balance_disaggregate(sample()), 0.22095238095238095238, 1e-15);
}

TEST(DisaggregateBalance, NoCycleIsRawRatio) {
  auto in = sample();
  in.y_current = in.y_potential;
  in.u_current = in.u_structural;
  in.x_term = 3.0;
  EXPECT_DOUBLE_EQ(fd::structural_balance_disaggregate(in), (40.0 - 20.0 + 3.0) / 100.0);

  auto zero = sample();
  for (auto& r : zero.revenues) r.elasticity = 0.0;
  zero.expenditure_elasticity = 0.0;
  zero.u_current = zero.u_structural;
  EXPECT_DOUBLE_EQ(fd::structural_balance_disaggregate(zero), 0.2);
}

TEST(DisaggregateBalance, ValidationNamesCategory) {
  auto in = sample();
  in.revenues[2].amount = -1.0;
  try {
    fd::structural_balance_disaggregate(in);
    FAIL();
  } catch (const fiscalstab::DomainError& e) {
    EXPECT_EQ(e.field(), "t3");
  }
  in = sample();
  in.u_structural = 0.0;
  EXPECT_THROW(fd::structural_balance_disaggregate(in), fiscalstab::DomainError);
}

TEST(DisaggregateBalance, ReducesToAggregate) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.8, 1.2);
  std::uniform_real_distribution<double> eps(-2.0, 2.0);
  for (int i = 0; i < 500; ++i) {
    const double yp = 1000.0;
    const double y = yp * u(rng);
    const double v = 350.0 * u(rng);
    const double c = 330.0 * u(rng);
    const double e = eps(rng);

    fd::DisaggregateInputs in;
    for (auto& r : in.revenues) r = {v / 4.0, e};
    in.expenditure = c;
    in.expenditure_elasticity = eps(rng);
    in.y_current = y;
    in.y_potential = yp;
    in.u_current = in.u_structural = 6.5;

    const double aggregate =
        fiscalstab::balance::structural_balance_aggregate({0, y, yp, v, c}, {e, 0.0});
    EXPECT_NEAR(fd::structural_balance_disaggregate(in) * yp, aggregate,
                1e-12 * std::max({std::fabs(aggregate), v, c}));
  }
}

TEST(DisaggregateBalance, RevenueMonotoneInOutput) {
  double previous = fd::adjust_revenue_category(10.0, 0.8, 100.0, 100.0);
  for (double y = 100.5; y < 130.0; y += 0.5) {
    const double now = fd::adjust_revenue_category(10.0, 0.8, y, 100.0);
    EXPECT_LT(now, previous);
    previous = now;
  }
}
