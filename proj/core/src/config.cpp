#include "fiscalstab/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "fiscalstab/csv.hpp"
#include "fiscalstab/error.hpp"

namespace fiscalstab::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

void require_positive(double v, const char* key) {
  if (!std::isfinite(v) || !(v > 0.0)) throw InputError("must be positive", 0, key);
}

}  // namespace

RunConfig parse_config(std::string_view text, RunConfig base) {
  RunConfig cfg = base;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw InputError("expected key = value", line_no);
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));

    auto number = [&] { return parse_number(value, line_no, key); };
    if (key == "eps_v") cfg.elasticities.epsilon_v = number();
    else if (key == "eps_c") cfg.elasticities.epsilon_c = number();
    else if (key == "deficit_ceiling") cfg.compliance.deficit_ceiling = number();
    else if (key == "structural_limit") cfg.compliance.structural_limit = number();
    else if (key == "structural_limit_relaxed") cfg.compliance.structural_limit_relaxed = number();
    else if (key == "relaxation_debt_ratio") cfg.compliance.relaxation_debt_ratio = number();
    else if (key == "tol_gradient") cfg.tolerances.gradient = number();
    else if (key == "tol_ode") cfg.tolerances.ode = number();
    else if (key == "tol_stationarity") cfg.tolerances.stationarity = number();
    else if (key == "format") {
      const auto f = parse_format(value);
      if (!f) throw InputError("unknown format '" + std::string(value) + "'", line_no, key);
      cfg.format = *f;
    } else {
      throw InputError("unknown key", line_no, key);
    }
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), base);
}

void validate(const RunConfig& config) {
  balance::validate(config.elasticities);
  require_positive(config.compliance.deficit_ceiling, "deficit_ceiling");
  require_positive(config.compliance.structural_limit, "structural_limit");
  require_positive(config.compliance.structural_limit_relaxed, "structural_limit_relaxed");
  require_positive(config.compliance.relaxation_debt_ratio, "relaxation_debt_ratio");
  require_positive(config.tolerances.gradient, "tol_gradient");
  require_positive(config.tolerances.ode, "tol_ode");
  require_positive(config.tolerances.stationarity, "tol_stationarity");
}

}  // namespace fiscalstab::io
