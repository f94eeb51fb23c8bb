#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "common.hpp"
#include "repstat/normal.hpp"
#include "repstat/projects.hpp"
#include "repstat/rates.hpp"
#include "repstat/power.hpp"
#include "repstat/sceptical.hpp"

namespace repstat_cli {
namespace {

struct CurvesArgs {
  std::string figure;
  double alpha = 0.025;
  double beta = 0.1;
  std::string input;
  std::string grid_text = "0.5:1.1:0.025";
  CLI::Option* input_opt = nullptr;
};

void row(const std::string& label, double x, double y) {
  std::printf("%s,%s,%s\n", label.c_str(), csv_num(x).c_str(),
              csv_num(y).c_str());
}

// Success-region boundaries in the (p_o, d) plane: the limiting relative
// effect size, the minimum successful d for a few relative sample sizes,
// and the d that passes the two-trials rule exactly.
void emit_fig2(const CurvesArgs& a) {
  const repstat::SuccessLevel lv = repstat::golden_level(a.alpha);
  const std::vector<double> cs = {0.2, 0.5, 1.0, 2.0, 5.0, 20.0};
  std::vector<double> grid;
  for (int i = 1; i <= 50; ++i) grid.push_back(i * 0.0005);

  for (double p_o : grid)
    row("rs_dinf", p_o, repstat::d_inf(-repstat::normal_quantile(p_o), lv));
  for (double c : cs)
    for (double p_o : grid)
      row("rs_c" + csv_num(c), p_o,
          repstat::d_min(-repstat::normal_quantile(p_o), c, lv));
  for (double c : cs)
    for (double p_o : grid) {
      const double z_o = -repstat::normal_quantile(p_o);
      row("2tr_c" + csv_num(c), p_o, lv.z_alpha / (z_o * std::sqrt(c)));
    }
}

// Conditional power against the original p-value, for both rules, two
// relative sample sizes, with and without shrinkage.  Exact zeros are
// omitted: they mean the rule has already failed, not low power.
void emit_fig3(const CurvesArgs& a) {
  const repstat::SuccessLevel golden = repstat::golden_level(a.alpha);
  const repstat::SuccessLevel nominal = repstat::nominal_level(a.alpha);
  std::vector<double> grid;
  for (int i = 1; i <= 100; ++i) grid.push_back(i * 0.0005);

  for (double c : {1.0, 5.0})
    for (double s : {0.0, 0.2}) {
      const std::string suffix = "_c" + csv_num(c) + "_s" + csv_num(s);
      for (double p_o : grid) {
        const double y = repstat::power_2tr_conditional(
            repstat::power_spec_from_p(p_o, c, s, golden));
        if (y != 0.0) row("2tr" + suffix, p_o, y);
      }
      for (double p_o : grid) {
        const double y = repstat::power_rs_conditional(
            repstat::power_spec_from_p(p_o, c, s, golden));
        if (y != 0.0) row("rs_golden" + suffix, p_o, y);
      }
      for (double p_o : grid) {
        const double y = repstat::power_rs_conditional(
            repstat::power_spec_from_p(p_o, c, s, nominal));
        if (y != 0.0) row("rs_nominal" + suffix, p_o, y);
      }
    }
}

// Overall type-I error and project power against the relative sample size.
void emit_fig4(const CurvesArgs& a) {
  const repstat::SuccessLevel golden = repstat::golden_level(a.alpha);
  const repstat::SuccessLevel nominal = repstat::nominal_level(a.alpha);
  std::vector<double> grid;
  for (int i = 1; i <= 60; ++i) grid.push_back(i * 0.05);
  for (int i = 16; i <= 100; ++i) grid.push_back(i * 0.2);

  for (double c : grid) row("t1e_2tr", c, repstat::t1e_two_trials(a.alpha));
  for (double c : grid)
    row("t1e_nominal", c, repstat::t1e_quadrature(c, nominal).value);
  for (double c : grid)
    row("t1e_golden", c, repstat::t1e_quadrature(c, golden).value);
  for (double c : grid)
    row("pp_2tr", c,
        repstat::project_power_two_trials(a.alpha, a.beta, c));
  for (double c : grid)
    row("pp_nominal", c,
        repstat::project_power_rs({a.alpha, a.beta, c, nominal, false})
            .value);
  for (double c : grid)
    row("pp_golden", c,
        repstat::project_power_rs({a.alpha, a.beta, c, golden, false})
            .value);
  for (double c : grid)
    row("pp_golden_restricted", c,
        repstat::project_power_rs({a.alpha, a.beta, c, golden, true}).value);
}

// Overall type-I error at c = 1 against the significance level itself.
void emit_fig5(const CurvesArgs&) {
  std::vector<double> grid;
  for (int i = 1; i <= 100; ++i) grid.push_back(i * 0.001);

  for (double alpha : grid) row("t1e_2tr", alpha, alpha * alpha);
  for (double alpha : grid)
    row("t1e_nominal", alpha,
        repstat::t1e_closed_c1(repstat::nominal_level(alpha)).value);
  for (double alpha : grid)
    row("t1e_golden", alpha,
        repstat::t1e_closed_c1(repstat::golden_level(alpha)).value);
}

std::string slug(const std::string& name) {
  std::string out;
  for (char ch : name)
    out += std::isalnum(static_cast<unsigned char>(ch))
               ? static_cast<char>(
                     std::tolower(static_cast<unsigned char>(ch)))
               : '_';
  return out;
}

// Per-project success proportions as the limiting relative effect size of
// the level calibration is swept.
void emit_fig7(const CurvesArgs& a) {
  if (a.input_opt->count() == 0)
    throw CLI::ValidationError("curves", "fig7 needs --input records");
  const std::vector<repstat::ProjectRecord> records =
      repstat::read_records_csv_file(a.input);
  const std::vector<double> grid = parse_grid(a.grid_text);

  std::vector<std::string> order;
  std::map<std::string, std::vector<repstat::ProjectRecord>> groups;
  for (const auto& r : records) {
    if (groups.find(r.project) == groups.end()) order.push_back(r.project);
    groups[r.project].push_back(r);
  }

  for (const std::string& project : order) {
    const std::vector<repstat::DinfSweepRow> rows =
        repstat::dinf_sweep(groups[project], a.alpha, grid);
    const std::string tag = slug(project);
    for (const auto& r : rows) row("rs_" + tag, r.d_inf, r.rs_rate);
    for (const auto& r : rows) row("2tr_" + tag, r.d_inf, r.ttr_rate);
    for (const auto& r : rows) row("both_" + tag, r.d_inf, r.both_rate);
  }
}

void run_curves(const CurvesArgs& a) {
  std::printf("curve_label,x,y\n");
  if (a.figure == "fig2")
    emit_fig2(a);
  else if (a.figure == "fig3")
    emit_fig3(a);
  else if (a.figure == "fig4")
    emit_fig4(a);
  else if (a.figure == "fig5")
    emit_fig5(a);
  else
    emit_fig7(a);
}

}  // namespace

void register_curves_command(CLI::App& app) {
  auto args = std::make_shared<CurvesArgs>();
  CLI::App* cmd = app.add_subcommand(
      "curves", "Emit figure curve data as curve_label,x,y CSV");
  cmd->add_option("--figure", args->figure, "Which figure's curves to emit")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5", "fig7"}));
  cmd->add_option("--alpha", args->alpha, "One-sided significance level")
      ->check(CLI::Range(1e-12, 0.5))
      ->capture_default_str();
  cmd->add_option("--beta", args->beta, "Type-II error of each study")
      ->check(CLI::Range(1e-12, 0.5))
      ->capture_default_str();
  args->input_opt = cmd->add_option("--input", args->input,
                                    "Replication records CSV (fig7)")
                        ->check(CLI::ExistingFile);
  cmd->add_option("--grid", args->grid_text,
                  "Limiting relative effect size grid a:b:step (fig7)")
      ->capture_default_str();
  cmd->callback([args] { run_curves(*args); });
}

}  // namespace repstat_cli
