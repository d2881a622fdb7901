#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fiscalstab/balance.hpp"
#include "fiscalstab/report.hpp"

namespace fiscalstab::io {

struct Tolerances {
  double gradient = 1e-5;
  double ode = 1e-8;
  double stationarity = 1e-9;
};

struct RunConfig {
  balance::Elasticities elasticities{};
  balance::ComplianceThresholds compliance{};
  Tolerances tolerances{};
  Format format = Format::text;
};

/// Flat `key = value` lines; '#' starts a comment. Recognised keys:
///
///     eps_v eps_c
///     deficit_ceiling structural_limit structural_limit_relaxed relaxation_debt_ratio
///     tol_gradient tol_ode tol_stationarity
///     format            (text | json | csv)
///
/// Keys not present keep the values already in `base`.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// Thresholds and tolerances must be positive and finite.
void validate(const RunConfig& config);

}  // namespace fiscalstab::io
