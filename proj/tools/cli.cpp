#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fiscalstab/balance.hpp"
#include "fiscalstab/config.hpp"
#include "fiscalstab/csv.hpp"
#include "fiscalstab/disaggregate.hpp"
#include "fiscalstab/effectiveness.hpp"
#include "fiscalstab/error.hpp"
#include "fiscalstab/report.hpp"
#include "fiscalstab/taxonomy.hpp"
#include "fiscalstab/volatility.hpp"

namespace fiscalstab::cli {
namespace {

using io::Report;
using io::Value;

/// Bad combination of otherwise well-formed flags.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kCyclicalFormWarning =
    "the closed form V(1 - Yp/Y) - C with a trailing '- C' contradicts SBc = SBC - SBS; "
    "the cyclical balance is computed as the residual";
constexpr const char* kChainRuleWarning =
    "chain-rule readings dVol/dt / (dK*/dt) and dVol/dt * 3K*^2 disagree with each other and "
    "with direct differentiation; the analytic gradient is authoritative";
constexpr const char* kLogisticCoefficientWarning =
    "closed-form coefficients 1720553 / 1720543 with e^-2014 are not reproduced; the "
    "trajectory is the exact logistic solution through the given initial condition";

template <typename T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

double pick(const std::optional<double>& row, const std::optional<double>& flag, double fallback) {
  if (row) return *row;
  if (flag) return *flag;
  return fallback;
}

Value num(double v) { return v; }
Value year_value(int y) { return static_cast<std::int64_t>(y); }

// --- balance-family option sets ---------------------------------------------

struct ObservationFlags {
  std::optional<std::string> input;
  std::optional<int> year;
  std::optional<double> y, yp, v, c;
  std::optional<double> eps_v, eps_c;

  void attach(CLI::App& app, bool with_budget = true) {
    app.add_option("--input", input, "observation CSV");
    app.add_option("--year", year, "period label for a single observation");
    app.add_option("--y", y, "current GDP");
    app.add_option("--yp", yp, "potential GDP");
    if (with_budget) {
      app.add_option("--v", v, "budgetary revenue");
      app.add_option("--c", c, "budgetary expenditure");
    }
    app.add_option("--eps-v", eps_v, "revenue elasticity");
    app.add_option("--eps-c", eps_c, "expenditure elasticity");
  }

  void add_inputs(Report& report) const {
    if (input) report.inputs.push_back({"input", *input});
    if (eps_v) report.inputs.push_back({"eps_v", *eps_v});
    if (eps_c) report.inputs.push_back({"eps_c", *eps_c});
  }

  /// Table from --input, or a one-row table from the scalar flags.
  io::ObservationTable table(Report& report) const {
    if (input) {
      if (y || yp || v || c) throw UsageError("--input cannot be combined with --y/--yp/--v/--c");
      return io::ingest_csv(*input);
    }
    io::ObservationRecord rec;
    rec.year = year.value_or(0);
    rec.y_current = need(y, "--y");
    rec.y_potential = need(yp, "--yp");
    rec.revenue = need(v, "--v");
    rec.expenditure = need(c, "--c");
    report.inputs.push_back({"y", rec.y_current});
    report.inputs.push_back({"yp", rec.y_potential});
    report.inputs.push_back({"v", rec.revenue});
    report.inputs.push_back({"c", rec.expenditure});
    return {{rec}};
  }

  balance::Elasticities elasticities(const io::ObservationRecord& rec,
                                     const io::RunConfig& cfg) const {
    return {pick(rec.eps_v, eps_v, cfg.elasticities.epsilon_v),
            pick(rec.eps_c, eps_c, cfg.elasticities.epsilon_c)};
  }
};

balance::FiscalObservation to_observation(const io::ObservationRecord& rec) {
  return {rec.year, rec.y_current, rec.y_potential, rec.revenue, rec.expenditure};
}

// --- commands ---------------------------------------------------------------

struct Context {
  io::RunConfig config;
};

Report cmd_gap(double y, double yp) {
  Report r{"gap"};
  r.inputs = {{"y", y}, {"yp", yp}};
  r.columns = {"gap"};
  balance::FiscalObservation obs{0, y, yp, 0.0, 0.0};
  r.add_row({num(balance::output_gap(obs))});
  return r;
}

Report cmd_balance(const ObservationFlags& flags, const Context& ctx) {
  Report r{"balance"};
  flags.add_inputs(r);
  const auto table = flags.table(r);
  r.columns = {"year", "y_current", "y_potential", "revenue", "expenditure", "eps_v",
               "eps_c", "gap", "sbc", "sbs", "sbc_cyclical"};
  for (const auto& rec : table.rows) {
    const auto obs = to_observation(rec);
    const auto el = flags.elasticities(rec, ctx.config);
    const auto d = balance::decompose(obs, el);
    r.add_row({year_value(rec.year), num(obs.y_current), num(obs.y_potential),
               num(obs.revenue), num(obs.expenditure), num(el.epsilon_v), num(el.epsilon_c),
               num(balance::output_gap(obs)), num(d.sbc), num(d.sbs), num(d.sbc_cyclical)});
  }
  r.warn("cyclical-closed-form", kCyclicalFormWarning);
  return r;
}

struct DisaggFlags {
  std::optional<std::string> input;
  std::optional<int> year;
  std::vector<double> t, eps_t;
  std::optional<double> c, eps_c_u, x, y, yp, u, u_star;

  void attach(CLI::App& app) {
    app.add_option("--input", input, "observation CSV with t1..t4 and unemployment columns");
    app.add_option("--year", year, "period label for a single observation");
    app.add_option("--t", t, "four revenue category amounts")->delimiter(',')->expected(4);
    app.add_option("--eps-t", eps_t, "four revenue elasticities")->delimiter(',')->expected(4);
    app.add_option("--c", c, "unemployment-sensitive expenditure");
    app.add_option("--eps-c-u", eps_c_u, "expenditure elasticity to unemployment");
    app.add_option("--x", x, "non-fiscal revenue net of capital expenditure");
    app.add_option("--y", y, "current GDP");
    app.add_option("--yp", yp, "potential GDP");
    app.add_option("--u", u, "current unemployment");
    app.add_option("--u-star", u_star, "structural unemployment");
  }
};

disagg::DisaggregateInputs to_disagg(const io::ObservationRecord& rec) {
  disagg::DisaggregateInputs in;
  for (int i = 0; i < 4; ++i) in.revenues[i] = {*rec.t[i], *rec.eps_t[i]};
  in.expenditure = rec.expenditure;
  in.expenditure_elasticity = *rec.eps_c_u;
  in.x_term = rec.x_term.value_or(0.0);
  in.y_current = rec.y_current;
  in.y_potential = rec.y_potential;
  in.u_current = *rec.u_current;
  in.u_structural = *rec.u_structural;
  return in;
}

Report cmd_disagg(const DisaggFlags& f) {
  Report r{"disagg"};
  r.columns = {"year", "sbs_ratio", "sbs_level"};
  std::vector<std::pair<int, disagg::DisaggregateInputs>> cases;
  if (f.input) {
    if (!f.t.empty() || f.c || f.y || f.yp || f.u || f.u_star) {
      throw UsageError("--input cannot be combined with per-observation flags");
    }
    r.inputs.push_back({"input", *f.input});
    const auto table = io::ingest_csv(*f.input);
    io::require_disaggregate_columns(table);
    for (const auto& rec : table.rows) cases.emplace_back(rec.year, to_disagg(rec));
  } else {
    if (f.t.size() != 4) throw UsageError("--t needs four comma-separated amounts");
    disagg::DisaggregateInputs in;
    const std::vector<double> eps = f.eps_t.empty() ? std::vector<double>(4, 0.0) : f.eps_t;
    if (eps.size() != 4) throw UsageError("--eps-t needs four comma-separated elasticities");
    for (int i = 0; i < 4; ++i) in.revenues[i] = {f.t[i], eps[i]};
    in.expenditure = need(f.c, "--c");
    in.expenditure_elasticity = f.eps_c_u.value_or(0.0);
    in.x_term = f.x.value_or(0.0);
    in.y_current = need(f.y, "--y");
    in.y_potential = need(f.yp, "--yp");
    in.u_current = need(f.u, "--u");
    in.u_structural = need(f.u_star, "--u-star");
    for (int i = 0; i < 4; ++i) {
      r.inputs.push_back({"t" + std::to_string(i + 1), in.revenues[i].amount});
      r.inputs.push_back({"eps_t" + std::to_string(i + 1), in.revenues[i].elasticity});
    }
    r.inputs.push_back({"c", in.expenditure});
    r.inputs.push_back({"eps_c_u", in.expenditure_elasticity});
    r.inputs.push_back({"x_term", in.x_term});
    r.inputs.push_back({"y", in.y_current});
    r.inputs.push_back({"yp", in.y_potential});
    r.inputs.push_back({"u", in.u_current});
    r.inputs.push_back({"u_star", in.u_structural});
    cases.emplace_back(f.year.value_or(0), in);
  }
  for (const auto& [year, in] : cases) {
    const double level = disagg::structural_balance_disaggregate_level(in);
    r.add_row({year_value(year), num(disagg::structural_balance_disaggregate(in)), num(level)});
  }
  return r;
}

Report cmd_sfa(const std::optional<double>& dsbc, const std::optional<double>& dsbs,
               const ObservationFlags& flags, const Context& ctx) {
  Report r{"sfa"};
  if (!flags.input) {
    r.inputs = {{"delta_sbc", need(dsbc, "--delta-sbc")}, {"delta_sbs", need(dsbs, "--delta-sbs")}};
    r.columns = {"sfa"};
    r.add_row({num(balance::sfa_from_deltas(*dsbc, *dsbs))});
    return r;
  }
  if (dsbc || dsbs) throw UsageError("--input cannot be combined with --delta-sbc/--delta-sbs");
  flags.add_inputs(r);
  const auto table = flags.table(r);
  if (table.rows.size() < 2) throw InputError("sfa over a table needs at least two years");
  r.columns = {"year", "delta_sbc", "delta_sbs", "sfa"};
  std::optional<balance::BalanceDecomposition> prev;
  for (const auto& rec : table.rows) {
    const auto d = balance::decompose(to_observation(rec), flags.elasticities(rec, ctx.config));
    if (prev) {
      const double delta_sbc = d.sbc - prev->sbc;
      const double delta_sbs = d.sbs - prev->sbs;
      r.add_row({year_value(rec.year), num(delta_sbc), num(delta_sbs),
                 num(balance::sfa_from_deltas(delta_sbc, delta_sbs))});
    }
    prev = d;
  }
  return r;
}

Report cmd_comply(const ObservationFlags& flags, const std::optional<double>& debt,
                  const Context& ctx) {
  Report r{"comply"};
  flags.add_inputs(r);
  auto table = flags.table(r);
  if (!flags.input) {
    table.rows[0].debt_ratio = need(debt, "--debt");
    r.inputs.push_back({"debt_ratio", *debt});
  } else if (debt) {
    for (auto& rec : table.rows) {
      if (!rec.debt_ratio) rec.debt_ratio = debt;
    }
  }
  io::require_debt_ratio(table);
  r.columns = {"year",         "deficit_ratio", "structural_ratio", "debt_ratio",
               "structural_limit", "deficit_ok",  "structural_ok"};
  for (const auto& rec : table.rows) {
    const auto obs = to_observation(rec);
    const auto d = balance::decompose(obs, flags.elasticities(rec, ctx.config));
    const auto v = balance::fp_compliance(d, obs.y_current, *rec.debt_ratio, ctx.config.compliance);
    r.add_row({year_value(rec.year), num(v.deficit_ratio), num(v.structural_ratio),
               num(v.debt_ratio), num(v.structural_limit_applied), v.deficit_ok,
               v.structural_ok});
  }
  return r;
}

Report cmd_classify(const std::vector<std::string>& pairs) {
  Report r{"classify"};
  std::vector<std::pair<std::string, std::string>> kv;
  for (const auto& p : pairs) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("expected key=value, got '" + p + "'");
    }
    kv.emplace_back(p.substr(0, eq), p.substr(eq + 1));
    r.inputs.push_back({kv.back().first, kv.back().second});
  }
  const auto cls = taxonomy::classify_stabiliser(taxonomy::parse_descriptor(kv));
  r.columns = {"class"};
  r.add_row({std::string(taxonomy::to_string(cls))});
  return r;
}

struct VolFlags {
  std::optional<double> k, b, k_star, b_root, n, m, y, yp;
  std::optional<double> dvol_dt, dk_dt, db_dt;

  void attach(CLI::App& app) {
    app.add_option("--k", k, "rate of action K");
    app.add_option("--b", b, "base of action B");
    app.add_option("--k-star", k_star, "cube root of K");
    app.add_option("--b-root", b_root, "cube root of B");
    app.add_option("--n", n, "N = |Va - Vp|");
    app.add_option("--m", m, "M = |Ca - Cp|");
    app.add_option("--y", y, "current GDP, for the equilibrium residual");
    app.add_option("--yp", yp, "potential GDP, for the equilibrium residual");
    app.add_option("--dvol-dt", dvol_dt, "time derivative of Vol, for the chain-rule forms");
    app.add_option("--dk-dt", dk_dt, "time derivative of K*");
    app.add_option("--db-dt", db_dt, "time derivative of b");
  }
};

Report cmd_vol(const VolFlags& f, const Context& ctx) {
  Report r{"vol"};
  if ((f.k && f.k_star) || (f.b && f.b_root)) {
    throw UsageError("give each factor either directly or as a cube root, not both");
  }
  volatility::VolParams p;
  p.n_term = need(f.n, "--n");
  p.m_term = need(f.m, "--m");
  if (f.k_star) {
    p.k_rate = *f.k_star * *f.k_star * *f.k_star;
  } else {
    p.k_rate = need(f.k, "--k");
  }
  if (f.b_root) {
    p.b_base = *f.b_root * *f.b_root * *f.b_root;
  } else {
    p.b_base = need(f.b, "--b");
  }
  r.inputs = {{"k", p.k_rate}, {"b", p.b_base}, {"n", p.n_term}, {"m", p.m_term}};

  const auto rep = volatility::classify_stationary(p, ctx.config.tolerances.stationarity);
  r.columns = {"vol",        "k_star",     "b_root", "degenerate", "grad_k_star", "grad_b",
               "hess_kk",    "hess_kb",    "hess_bb", "is_stationary", "second_differential"};
  r.add_row({num(volatility::vol_value(p)), num(volatility::k_star(p)),
             num(volatility::b_root(p)), rep.degenerate, num(rep.gradient[0]),
             num(rep.gradient[1]), num(rep.hessian[0][0]), num(rep.hessian[0][1]),
             num(rep.hessian[1][1]), rep.is_stationary,
             std::string(volatility::to_string(rep.second_differential_sign))});

  if (!rep.degenerate) {
    const auto fd = volatility::vol_gradient_central_difference(p);
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double scale = std::max(std::fabs(rep.gradient[i]), 1e-300);
      const double err = std::fabs(fd[i] - rep.gradient[i]);
      worst = std::max(worst, rep.gradient[i] == 0.0 ? err : err / scale);
    }
    r.summary.push_back({"fd_gradient_max_rel_err", worst});
    r.summary.push_back({"fd_gradient_ok", worst <= ctx.config.tolerances.gradient});
  }
  if (f.y || f.yp) {
    r.summary.push_back(
        {"equilibrium_residual",
         volatility::equilibrium_residual(need(f.y, "--y"), need(f.yp, "--yp"), p)});
  }
  if (f.dvol_dt || f.dk_dt || f.db_dt) {
    const auto forms = volatility::vol_gradient_paper_form(
        p, need(f.dvol_dt, "--dvol-dt"), need(f.dk_dt, "--dk-dt"), need(f.db_dt, "--db-dt"));
    r.summary.push_back({"chain_inverse_rate_k_star", forms.inverse_rate[0]});
    r.summary.push_back({"chain_inverse_rate_b", forms.inverse_rate[1]});
    r.summary.push_back({"chain_cube_multiplier_k_star", forms.cube_multiplier[0]});
    r.summary.push_back({"chain_cube_multiplier_b", forms.cube_multiplier[1]});
    r.warn("chain-rule-gradient-form", kChainRuleWarning);
  }
  return r;
}

struct EffectFlags {
  std::optional<double> k, b;
  std::optional<double> b0, t0, t1, step;
  std::optional<double> k_const, coupling_c;
  std::optional<std::string> k_csv, plot_csv;
  bool check_optimality = false;

  void attach(CLI::App& app) {
    app.add_option("--k", k, "rate of action (point evaluation)");
    app.add_option("--b", b, "base of action (point evaluation)");
    app.add_option("--b0", b0, "base of action at --t0 (trajectory)");
    app.add_option("--t0", t0, "initial time");
    app.add_option("--t1", t1, "final time");
    app.add_option("--step", step, "grid spacing (default 1)");
    app.add_option("--k-const", k_const, "constant rate of action");
    app.add_option("--coupling-c", coupling_c, "couple K = c / B");
    app.add_option("--k-csv", k_csv, "CSV with columns t,k giving the grid and rate samples");
    app.add_option("--plot-csv", plot_csv, "also write t,B,K,E to this file");
    app.add_flag("--check-optimality", check_optimality,
                 "evaluate the rate-profile and curvature optimality conditions");
  }
};

Report effect_point(const EffectFlags& f) {
  Report r{"effect"};
  const double k = need(f.k, "--k");
  const double b = need(f.b, "--b");
  r.inputs = {{"k", k}, {"b", b}};
  const double e = effectiveness::effectiveness(k, b);
  r.columns = {"effectiveness", "marginal_rate_substitution", "logistic_rhs"};
  r.add_row({num(e), num(effectiveness::marginal_rate_substitution(k, b)),
             num(effectiveness::effectiveness_logistic_rhs(e))});
  return r;
}

Report effect_trajectory(const EffectFlags& f) {
  Report r{"effect"};
  const int modes = (f.k_const ? 1 : 0) + (f.coupling_c ? 1 : 0) + (f.k_csv ? 1 : 0);
  if (modes != 1) throw UsageError("choose exactly one of --k-const, --coupling-c, --k-csv");

  const double b0 = need(f.b0, "--b0");
  r.inputs.push_back({"b0", b0});

  std::vector<double> grid;
  std::vector<double> k_samples;
  double t0 = 0.0;
  if (f.k_csv) {
    if (f.t1 || f.step) throw UsageError("--k-csv supplies the grid; drop --t1/--step");
    const auto doc = io::read_csv(*f.k_csv);
    grid = io::numeric_column(doc, "t");
    k_samples = io::numeric_column(doc, "k");
    if (grid.empty()) throw InputError("rate CSV has no rows");
    t0 = f.t0.value_or(grid.front());
    r.inputs.push_back({"k_csv", *f.k_csv});
  } else {
    t0 = need(f.t0, "--t0");
    grid = effectiveness::make_grid(t0, need(f.t1, "--t1"), f.step.value_or(1.0));
    r.inputs.push_back({"t1", *f.t1});
    r.inputs.push_back({"step", f.step.value_or(1.0)});
  }
  r.inputs.push_back({"t0", t0});

  const auto init = effectiveness::LogisticSolution::through(t0, b0);
  effectiveness::EffectivenessPath path;
  if (f.coupling_c) {
    r.inputs.push_back({"coupling_c", *f.coupling_c});
    path = effectiveness::effectiveness_trajectory(effectiveness::RateFromBase{*f.coupling_c},
                                                   init, grid);
  } else {
    if (f.k_const) {
      r.inputs.push_back({"k_const", *f.k_const});
      k_samples.assign(grid.size(), *f.k_const);
    }
    path = effectiveness::effectiveness_trajectory(k_samples, init, grid);
  }

  std::vector<effectiveness::OptimalitySample> checks;
  if (f.check_optimality) {
    checks = effectiveness::optimality_condition_check(path.rate, init.c_const, init.t0,
                                                       path.times);
  }

  r.columns = {"t", "B", "K", "E"};
  if (f.check_optimality) {
    r.columns.insert(r.columns.end(), {"expected_rate_ratio", "rate_condition", "curvature",
                                       "curvature_condition"});
  }
  for (std::size_t i = 0; i < path.times.size(); ++i) {
    std::vector<Value> row = {num(path.times[i]), num(path.base[i]), num(path.rate[i]),
                              num(path.effectiveness[i])};
    if (f.check_optimality) {
      row.insert(row.end(), {num(checks[i].expected_rate_ratio), checks[i].rate_condition,
                             num(checks[i].curvature), checks[i].curvature_condition});
    }
    r.add_row(std::move(row));
  }

  r.summary.push_back({"c_const", init.c_const});
  if (path.times.size() >= 5) {
    const auto search = effectiveness::optimum_search(path);
    r.summary.push_back({"degenerate", search.degenerate});
    r.summary.push_back({"optimum_count", static_cast<std::int64_t>(search.optima.size())});
    for (std::size_t j = 0; j < search.optima.size(); ++j) {
      const std::string prefix = "optimum_" + std::to_string(j + 1) + "_";
      r.summary.push_back({prefix + "t", search.optima[j].time});
      r.summary.push_back({prefix + "E", search.optima[j].value});
      r.summary.push_back({prefix + "kind", std::string(to_string(search.optima[j].kind))});
    }
  } else {
    r.warn("optimum-search-skipped", "optimum search needs at least 5 samples");
  }

  if (f.plot_csv) {
    Report plot;
    plot.columns = {"t", "B", "K", "E"};
    for (const auto& row : r.rows) plot.add_row({row[0], row[1], row[2], row[3]});
    std::ofstream file(*f.plot_csv, std::ios::binary);
    if (!file) throw InputError("cannot write '" + *f.plot_csv + "'");
    file << io::render(plot, io::Format::csv);
  }
  return r;
}

struct SimulateFlags {
  std::optional<double> b0, t0, t1, step;
  std::optional<std::string> b0_csv, b0_column;

  void attach(CLI::App& app) {
    app.add_option("--b0", b0, "initial base of action B(t0)");
    app.add_option("--b0-csv", b0_csv, "take B(t0) as the exact decimal total of a CSV column");
    app.add_option("--b0-column", b0_column, "column summed by --b0-csv");
    app.add_option("--t0", t0, "initial time");
    app.add_option("--t1", t1, "final time");
    app.add_option("--step", step, "grid spacing (default 1)");
  }
};

Report cmd_simulate(const SimulateFlags& f, const Context& ctx) {
  Report r{"simulate"};
  double b0 = 0.0;
  if (f.b0_csv) {
    if (f.b0) throw UsageError("give either --b0 or --b0-csv");
    const auto total = io::exact_column_sum(io::read_csv(*f.b0_csv), need(f.b0_column, "--b0-column"));
    b0 = total.to_double();
    r.inputs.push_back({"b0_csv", *f.b0_csv});
    r.inputs.push_back({"b0_column", *f.b0_column});
    r.inputs.push_back({"b0_exact", total.to_string()});
  } else {
    b0 = need(f.b0, "--b0");
  }
  const double t0 = need(f.t0, "--t0");
  const double t1 = need(f.t1, "--t1");
  const double step = f.step.value_or(1.0);
  r.inputs.push_back({"b0", b0});
  r.inputs.push_back({"t0", t0});
  r.inputs.push_back({"t1", t1});
  r.inputs.push_back({"step", step});

  const auto init = effectiveness::LogisticSolution::through(t0, b0);
  effectiveness::NumericOptions opts;
  opts.rel_tol = ctx.config.tolerances.ode;
  const auto numeric = effectiveness::base_logistic_numeric(b0, t0, t1, step, opts);

  r.columns = {"t", "B_analytic", "B_numeric", "rel_diff"};
  double worst = 0.0;
  bool increasing = true;
  bool decreasing = true;
  for (std::size_t i = 0; i < numeric.times.size(); ++i) {
    const double exact = effectiveness::base_logistic_analytic(init, numeric.times[i]);
    const double diff =
        exact == 0.0 ? std::fabs(numeric.values[i])
                     : std::fabs(numeric.values[i] - exact) / std::fabs(exact);
    worst = std::max(worst, diff);
    if (i > 0) {
      increasing = increasing && numeric.values[i] > numeric.values[i - 1];
      decreasing = decreasing && numeric.values[i] < numeric.values[i - 1];
    }
    r.add_row({num(numeric.times[i]), num(exact), num(numeric.values[i]), num(diff)});
  }
  r.summary.push_back({"c_const", init.c_const});
  r.summary.push_back({"log_abs_c_unshifted", init.log_abs_unshifted_constant()});
  r.summary.push_back({"max_rel_diff", worst});
  r.summary.push_back(
      {"trend", std::string(decreasing ? "decreasing" : increasing ? "increasing" : "constant")});
  r.warn("logistic-printed-coefficients", kLogisticCoefficientWarning);
  return r;
}

void emit(const Report& report, io::Format format, const std::optional<std::string>& out_path,
          std::ostream& out, std::ostream& err) {
  const std::string text = io::render(report, format);
  if (format != io::Format::json) {
    for (const auto& w : report.warnings) err << "warning: [" << w.code << "] " << w.message << '\n';
  }
  if (out_path) {
    std::ofstream file(*out_path, std::ios::binary);
    if (!file) throw InputError("cannot write '" + *out_path + "'");
    file << text;
  } else {
    out << text;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structural budget balance, automatic stabiliser and effectiveness toolkit",
               "fiscalstab"};
  app.require_subcommand(1);

  std::optional<std::string> config_path, format_name, out_path;
  app.add_option("--config", config_path, "key=value file overriding defaults");
  app.add_option("--format", format_name, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_path, "write the report to a file");

  auto* gap = app.add_subcommand("gap", "output gap (Y - Yp) / Yp");
  double gap_y = 0.0, gap_yp = 0.0;
  gap->add_option("--y", gap_y, "current GDP")->required();
  gap->add_option("--yp", gap_yp, "potential GDP")->required();

  auto* bal = app.add_subcommand("balance", "conventional / structural / cyclical balances");
  ObservationFlags bal_flags;
  bal_flags.attach(*bal);

  auto* dis = app.add_subcommand("disagg", "disaggregate structural balance ratio");
  DisaggFlags dis_flags;
  dis_flags.attach(*dis);

  auto* sfa = app.add_subcommand("sfa", "automatic stabiliser component of a balance change");
  std::optional<double> delta_sbc, delta_sbs;
  ObservationFlags sfa_flags;
  sfa->add_option("--delta-sbc", delta_sbc, "change of the conventional balance");
  sfa->add_option("--delta-sbs", delta_sbs, "change of the structural balance");
  sfa->add_option("--input", sfa_flags.input, "observation CSV; deltas between years");
  sfa->add_option("--eps-v", sfa_flags.eps_v, "revenue elasticity");
  sfa->add_option("--eps-c", sfa_flags.eps_c, "expenditure elasticity");

  auto* comply = app.add_subcommand("comply", "deficit and structural balance ceilings");
  ObservationFlags comply_flags;
  std::optional<double> debt;
  comply_flags.attach(*comply);
  comply->add_option("--debt", debt, "public debt / GDP");

  auto* classify = app.add_subcommand("classify", "classify a stabiliser descriptor");
  std::vector<std::string> pairs;
  classify->add_option("pairs", pairs, "predicate key=value pairs");

  auto* vol = app.add_subcommand("vol", "volatility function, gradient, Hessian");
  VolFlags vol_flags;
  vol_flags.attach(*vol);

  auto* effect = app.add_subcommand("effect", "effectiveness at a point or along a trajectory");
  EffectFlags effect_flags;
  effect_flags.attach(*effect);

  auto* sim = app.add_subcommand("simulate", "logistic base-of-action trajectory");
  SimulateFlags sim_flags;
  sim_flags.attach(*sim);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    Context ctx;
    if (config_path) ctx.config = io::load_config(*config_path);
    io::Format format = ctx.config.format;
    if (format_name) format = *io::parse_format(*format_name);

    Report report;
    if (gap->parsed()) report = cmd_gap(gap_y, gap_yp);
    else if (bal->parsed()) report = cmd_balance(bal_flags, ctx);
    else if (dis->parsed()) report = cmd_disagg(dis_flags);
    else if (sfa->parsed()) report = cmd_sfa(delta_sbc, delta_sbs, sfa_flags, ctx);
    else if (comply->parsed()) report = cmd_comply(comply_flags, debt, ctx);
    else if (classify->parsed()) report = cmd_classify(pairs);
    else if (vol->parsed()) report = cmd_vol(vol_flags, ctx);
    else if (effect->parsed()) {
      const bool point = effect_flags.k || effect_flags.b;
      if (point && (effect_flags.b0 || effect_flags.k_const || effect_flags.coupling_c ||
                    effect_flags.k_csv)) {
        throw UsageError("point mode (--k/--b) cannot be combined with trajectory options");
      }
      report = point ? effect_point(effect_flags) : effect_trajectory(effect_flags);
    } else if (sim->parsed()) report = cmd_simulate(sim_flags, ctx);

    emit(report, format, out_path, out, err);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace fiscalstab::cli
