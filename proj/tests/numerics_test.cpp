#include "fiscalstab/numerics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fiscalstab/error.hpp"

namespace fn = fiscalstab::numerics;

TEST(Quadrature, KnownIntegrals) {
  EXPECT_NEAR(fn::integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi),
              2.0, 1e-10);
  EXPECT_NEAR(fn::integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 1.0),
              std::numbers::e - 1.0, 1e-10);
  // C / (C + e^s) integrates to s - log(C + e^s) + const.
  const double c = 0.7;
  auto prim = [c](double s) { return s - std::log(c + std::exp(s)); };
  EXPECT_NEAR(fn::integrate_adaptive([c](double s) { return c / (c + std::exp(s)); }, -2.0, 3.0),
              prim(3.0) - prim(-2.0), 1e-9);
  EXPECT_EQ(fn::integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0), 0.0);
}

TEST(Quadrature, NonFiniteIntegrandThrows) {
  EXPECT_THROW(fn::integrate_adaptive([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0),
               fiscalstab::NumericError);
}

TEST(Derivatives, ExactForQuadraticsOnNonUniformGrid) {
  const std::vector<double> t = {0.0, 0.1, 0.35, 0.5, 0.9, 1.0, 1.6};
  std::vector<double> f;
  for (double x : t) f.push_back(3.0 * x * x - 2.0 * x + 1.0);
  const auto d1 = fn::first_derivative(t, f);
  const auto d2 = fn::second_derivative(t, f);
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_NEAR(d1[i], 6.0 * t[i] - 2.0, 1e-11) << i;
    EXPECT_NEAR(d2[i], 6.0, 1e-9) << i;
  }
}

TEST(Derivatives, SecondOrderConvergence) {
  auto err_at = [](int n) {
    std::vector<double> t, f;
    for (int i = 0; i <= n; ++i) {
      t.push_back(static_cast<double>(i) / n);
      f.push_back(std::sin(3.0 * t.back()));
    }
    const auto d = fn::first_derivative(t, f);
    double worst = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      worst = std::max(worst, std::fabs(d[i] - 3.0 * std::cos(3.0 * t[i])));
    }
    return worst;
  };
  const double ratio = err_at(50) / err_at(100);
  EXPECT_GT(ratio, 3.5);
  EXPECT_LT(ratio, 4.5);
}

TEST(Derivatives, GridValidation) {
  const std::vector<double> bad = {0.0, 1.0, 1.0};
  const std::vector<double> f = {1.0, 2.0, 3.0};
  EXPECT_THROW(fn::first_derivative(bad, f), fiscalstab::DomainError);
  const std::vector<double> shortg = {0.0, 1.0};
  EXPECT_THROW(fn::second_derivative(shortg, {f.data(), 2}), fiscalstab::DomainError);
}
