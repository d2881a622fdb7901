#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fiscalstab::numerics {

/// Adaptive Simpson quadrature on [a, b] with bisection at interval midpoints.
/// Throws NumericError when the recursion depth is exhausted or the integrand
/// returns a non-finite value.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-9, int max_depth = 48);

/// Three-point derivative estimates on a strictly increasing, possibly
/// non-uniform grid. Interior points use the centred stencil, end points the
/// one-sided second-order stencil. Requires at least three samples.
std::vector<double> first_derivative(std::span<const double> t, std::span<const double> f);
std::vector<double> second_derivative(std::span<const double> t, std::span<const double> f);

/// Throws DomainError if `t` is not strictly increasing or sizes differ.
void require_grid(std::span<const double> t, std::span<const double> f, std::size_t min_size);

}  // namespace fiscalstab::numerics
