#include <cmath>
#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "common.hpp"
#include "json.hpp"
#include "repstat/design.hpp"
#include "repstat/errors.hpp"
#include "repstat/normal.hpp"
#include "repstat/power.hpp"
#include "repstat/rates.hpp"
#include "repstat/sceptical.hpp"

using nlohmann::json;

namespace repstat_cli {
namespace {

constexpr const char* kConflictMarker = "undefined (opposite directions)";

// --rs / --2tr method switch shared by power, rates, and design.  --rs is
// the default and exists so pipelines can be explicit about it.
struct MethodFlags {
  bool rs = false;
  bool two_trials = false;

  void attach(CLI::App* cmd) {
    CLI::Option* rs_opt =
        cmd->add_flag("--rs", rs, "Replication success rule (the default)");
    cmd->add_flag("--2tr", two_trials,
                  "Two-trials rule instead of replication success")
        ->excludes(rs_opt);
  }
};

// ----------------------------------------------------------------- assess

struct AssessArgs {
  LevelOptions level;
  double z_o = 0, z_r = 0, c = 0;
  double p_o = 0, p_r = 0;
  double t_o = 0, s_o = 0, t_r = 0, s_r = 0;
  CLI::Option *zo_opt, *zr_opt, *c_opt, *po_opt, *pr_opt;
  CLI::Option *to_opt, *so_opt, *tr_opt, *sr_opt;
  bool as_json = false;
};

repstat::StudyPair assess_pair(const AssessArgs& a) {
  const bool any_z = a.zo_opt->count() || a.zr_opt->count();
  const bool any_p = a.po_opt->count() || a.pr_opt->count();
  const bool any_t = a.to_opt->count() || a.so_opt->count() ||
                     a.tr_opt->count() || a.sr_opt->count();
  if (any_z + any_p + any_t != 1)
    throw CLI::ValidationError(
        "assess",
        "give exactly one input group: --zo/--zr/--c, --po/--pr/--c, or "
        "--to/--so/--tr/--sr");
  if (any_t) {
    if (!(a.to_opt->count() && a.so_opt->count() && a.tr_opt->count() &&
          a.sr_opt->count()))
      throw CLI::ValidationError(
          "assess", "the estimate group needs all of --to --so --tr --sr");
    if (a.c_opt->count())
      throw CLI::ValidationError(
          "assess", "--c is implied by the standard errors; do not pass it");
    return repstat::study_pair_from_estimates(a.t_o, a.s_o, a.t_r, a.s_r);
  }
  if (!a.c_opt->count())
    throw CLI::ValidationError("assess", "--c is required with this group");
  if (any_p) {
    if (!(a.po_opt->count() && a.pr_opt->count()))
      throw CLI::ValidationError("assess", "--po and --pr go together");
    return repstat::study_pair_from_p(a.p_o, a.p_r, a.c);
  }
  if (!(a.zo_opt->count() && a.zr_opt->count()))
    throw CLI::ValidationError("assess", "--zo and --zr go together");
  return repstat::study_pair_from_z(a.z_o, a.z_r, a.c);
}

void run_assess(const AssessArgs& a) {
  const repstat::StudyPair pair = assess_pair(a);
  const repstat::SuccessLevel lv = a.level.resolve();
  const repstat::AssessmentResult r = repstat::assess(pair, lv);
  const bool conflict = !r.p_s.has_value();

  if (a.as_json) {
    json j = {
        {"command", "assess"},
        {"input", {{"z_o", pair.z_o}, {"z_r", pair.z_r}, {"c", pair.c}}},
        {"level", level_json(lv)},
        {"result",
         {{"d", json_num(r.d)},
          {"shrinkage", json_num(r.shrinkage_s)},
          {"p_o", r.p_o},
          {"p_r", r.p_r},
          {"p_s", r.p_s ? json(*r.p_s) : json(nullptr)},
          {"p_s_tilde", r.p_s_tilde ? json(*r.p_s_tilde) : json(nullptr)},
          {"direction_conflict", conflict},
          {"d_min", json_num(r.d_min)},
          {"d_inf", json_num(r.d_inf)},
          {"z_r_min", json_num(r.z_r_min)},
          {"rs_success", r.rs_success},
          {"ttr_success", r.ttr_success},
          {"discrepant", r.discrepant}}}};
    emit_json(j);
    return;
  }

  print_kv("z_o", fmt(pair.z_o));
  print_kv("z_r", fmt(pair.z_r));
  print_kv("c", fmt(pair.c));
  print_kv("level", level_text(lv));
  print_kv("d", fmt(r.d));
  print_kv("shrinkage", fmt(r.shrinkage_s));
  print_kv("p_o", fmt(r.p_o));
  print_kv("p_r", fmt(r.p_r));
  print_kv("p_s", r.p_s ? fmt(*r.p_s) : kConflictMarker);
  print_kv("p_s_tilde", r.p_s_tilde ? fmt(*r.p_s_tilde) : kConflictMarker);
  print_kv("d_min", fmt(r.d_min));
  print_kv("d_inf", fmt(r.d_inf));
  print_kv("z_r_min", fmt(r.z_r_min));
  print_kv("rs_success", fmt_bool(r.rs_success));
  print_kv("ttr_success", fmt_bool(r.ttr_success));
  print_kv("discrepant", fmt_bool(r.discrepant));
}

void setup_assess(CLI::App& app) {
  auto args = std::make_shared<AssessArgs>();
  CLI::App* cmd = app.add_subcommand(
      "assess", "Assess one original/replication pair for success");
  args->zo_opt = cmd->add_option("--zo", args->z_o, "Original z statistic");
  args->zr_opt = cmd->add_option("--zr", args->z_r, "Replication z statistic");
  args->c_opt = cmd->add_option(
      "--c", args->c, "Relative sample size (variance ratio sigma_o^2 / sigma_r^2)");
  args->po_opt =
      cmd->add_option("--po", args->p_o, "Original one-sided p-value");
  args->pr_opt =
      cmd->add_option("--pr", args->p_r, "Replication one-sided p-value");
  args->to_opt = cmd->add_option("--to", args->t_o, "Original effect estimate");
  args->so_opt =
      cmd->add_option("--so", args->s_o, "Original standard error");
  args->tr_opt =
      cmd->add_option("--tr", args->t_r, "Replication effect estimate");
  args->sr_opt =
      cmd->add_option("--sr", args->s_r, "Replication standard error");
  args->level.attach(cmd);
  cmd->add_flag("--json", args->as_json, "Machine-readable output");
  cmd->callback([args] { run_assess(*args); });
}

// ------------------------------------------------------------------ power

struct PowerArgs {
  LevelOptions level;
  MethodFlags method;
  double z_o = 0, p_o = 0, c = 1.0, shrinkage = 0.0;
  std::string mode = "conditional";
  CLI::Option *zo_opt, *po_opt;
  bool as_json = false;
};

void run_power(const PowerArgs& a) {
  if (a.zo_opt->count() == a.po_opt->count())
    throw CLI::ValidationError("power", "give exactly one of --zo or --po");
  const repstat::SuccessLevel lv = a.level.resolve();
  const repstat::PowerSpec spec =
      a.po_opt->count()
          ? repstat::power_spec_from_p(a.p_o, a.c, a.shrinkage, lv)
          : repstat::PowerSpec{a.z_o, a.c, a.shrinkage, lv};

  double value = 0.0;
  if (a.method.two_trials) {
    value = a.mode == "predictive" ? repstat::power_2tr_predictive(spec)
                                   : repstat::power_2tr_conditional(spec);
  } else {
    value = a.mode == "predictive" ? repstat::power_rs_predictive(spec)
                                   : repstat::power_rs_conditional(spec);
  }

  const char* method = a.method.two_trials ? "two_trials" : "rs";
  if (a.as_json) {
    emit_json({{"command", "power"},
               {"method", method},
               {"mode", a.mode},
               {"input",
                {{"z_o", spec.z_o},
                 {"c", spec.c},
                 {"shrinkage", spec.shrinkage}}},
               {"level", level_json(lv)},
               {"power", value}});
    return;
  }
  print_kv("method", method);
  print_kv("mode", a.mode);
  print_kv("z_o", fmt(spec.z_o));
  print_kv("c", fmt(spec.c));
  print_kv("shrinkage", fmt(spec.shrinkage));
  print_kv("level", level_text(lv));
  print_kv("power", fmt(value));
}

void setup_power(CLI::App& app) {
  auto args = std::make_shared<PowerArgs>();
  CLI::App* cmd = app.add_subcommand(
      "power", "Power of a planned replication given the original result");
  args->zo_opt = cmd->add_option("--zo", args->z_o, "Original z statistic");
  args->po_opt =
      cmd->add_option("--po", args->p_o, "Original one-sided p-value");
  cmd->add_option("--c", args->c, "Relative sample size")
      ->capture_default_str();
  cmd->add_option("--shrinkage", args->shrinkage,
                  "Assumed shrinkage of the original effect (conditional)")
      ->capture_default_str();
  cmd->add_option("--mode", args->mode, "Uncertainty handling")
      ->check(CLI::IsMember({"conditional", "predictive"}))
      ->capture_default_str();
  args->method.attach(cmd);
  args->level.attach(cmd);
  cmd->add_flag("--json", args->as_json, "Machine-readable output");
  cmd->callback([args] { run_power(*args); });
}

// ------------------------------------------------------------------ rates

struct RatesArgs {
  LevelOptions level;
  MethodFlags method;
  double c = 1.0, beta = 0.1;
  bool t1e = false, pp = false;
  bool restricted = false;
  bool as_json = false;
};

void run_rates(const RatesArgs& a) {
  if (a.t1e == a.pp)
    throw CLI::ValidationError("rates", "give exactly one of --t1e or --pp");
  if (a.restricted && (a.method.two_trials || a.t1e))
    throw CLI::ValidationError(
        "rates", "--restricted only applies to --pp without --2tr");
  const repstat::SuccessLevel lv = a.level.resolve();

  repstat::RateResult r{0.0, 0.0, 0};
  const char* quantity = a.t1e ? "t1e" : "project_power";
  const char* method = a.method.two_trials ? "two_trials" : "rs";
  if (a.t1e) {
    if (a.method.two_trials)
      r = {repstat::t1e_two_trials(a.level.alpha), 0.0, 0};
    else if (a.c == 1.0)
      r = repstat::t1e_closed_c1(lv);
    else
      r = repstat::t1e_quadrature(a.c, lv);
  } else {
    if (a.method.two_trials)
      r = {repstat::project_power_two_trials(a.level.alpha, a.beta, a.c), 0.0,
           0};
    else
      r = repstat::project_power_rs(
          {a.level.alpha, a.beta, a.c, lv, a.restricted});
  }

  if (a.as_json) {
    json j = {{"command", "rates"},
              {"quantity", quantity},
              {"method", method},
              {"c", a.c},
              {"level", level_json(lv)},
              {"value", r.value},
              {"abs_error_estimate", r.abs_error_estimate},
              {"evaluations", r.evaluations}};
    if (a.pp) {
      j["beta"] = a.beta;
      j["restricted"] = a.restricted;
    }
    emit_json(j);
    return;
  }
  print_kv("quantity", quantity);
  print_kv("method", method);
  print_kv("c", fmt(a.c));
  if (a.pp) {
    print_kv("beta", fmt(a.beta));
    print_kv("restricted", fmt_bool(a.restricted));
  }
  print_kv("level", level_text(lv));
  print_kv("value", fmt(r.value));
  print_kv("abs_error_est", fmt(r.abs_error_estimate));
  print_kv("evaluations", std::to_string(r.evaluations));
}

void setup_rates(CLI::App& app) {
  auto args = std::make_shared<RatesArgs>();
  CLI::App* cmd = app.add_subcommand(
      "rates", "Overall type-I error or project power of a success rule");
  cmd->add_flag("--t1e", args->t1e, "Overall type-I error rate");
  cmd->add_flag("--pp", args->pp, "Project power (both studies powered)");
  cmd->add_option("--c", args->c, "Relative sample size")
      ->capture_default_str();
  cmd->add_option("--beta", args->beta, "Type-II error of each study (--pp)")
      ->check(CLI::Range(1e-12, 0.5))
      ->capture_default_str();
  args->method.attach(cmd);
  cmd->add_flag("--restricted", args->restricted,
                "Condition project power on a significant original");
  args->level.attach(cmd);
  cmd->add_flag("--json", args->as_json, "Machine-readable output");
  cmd->callback([args] { run_rates(*args); });
}

// ----------------------------------------------------------------- design

struct DesignArgs {
  LevelOptions level;
  MethodFlags method;
  double z_o = 0, p_o = 0, d_target = 0, power_target = 0, shrinkage = 0.0;
  CLI::Option *zo_opt, *po_opt, *dmin_opt, *power_opt;
  bool as_json = false;
};

void run_design(const DesignArgs& a) {
  if (a.zo_opt->count() == a.po_opt->count())
    throw CLI::ValidationError("design", "give exactly one of --zo or --po");
  if (a.dmin_opt->count() == a.power_opt->count())
    throw CLI::ValidationError("design",
                               "give exactly one of --dmin or --power");
  const bool by_d = a.dmin_opt->count() > 0;
  if (by_d && a.shrinkage != 0.0)
    throw CLI::ValidationError("design",
                               "--shrinkage only applies to --power");
  const repstat::SuccessLevel lv = a.level.resolve();
  const double z_o = a.po_opt->count()
                         ? -repstat::normal_quantile(a.p_o)
                         : a.z_o;

  double c = 0.0;
  double achieved = 0.0;
  const char* target_kind = by_d ? "d_min" : "power";
  const double target = by_d ? a.d_target : a.power_target;
  if (a.method.two_trials) {
    if (by_d) {
      c = repstat::c_from_d_two_trials(z_o, a.d_target, a.level.alpha);
      achieved = lv.z_alpha / (z_o * std::sqrt(c));
    } else {
      c = repstat::c_from_power_two_trials(z_o, a.power_target, a.shrinkage,
                                           a.level.alpha);
      achieved =
          repstat::power_2tr_conditional({z_o, c, a.shrinkage, lv});
    }
  } else {
    if (by_d) {
      c = repstat::c_from_dmin_rs(z_o, a.d_target, lv);
      achieved = repstat::d_min(z_o, c, lv);
    } else {
      c = repstat::c_from_power_rs(z_o, a.power_target, a.shrinkage, lv);
      achieved =
          repstat::power_rs_conditional({z_o, c, a.shrinkage, lv});
    }
  }

  const char* method = a.method.two_trials ? "two_trials" : "rs";
  if (a.as_json) {
    emit_json({{"command", "design"},
               {"method", method},
               {"input",
                {{"z_o", z_o}, {"shrinkage", a.shrinkage}}},
               {"level", level_json(lv)},
               {"target", {{"kind", target_kind}, {"value", target}}},
               {"c", c},
               {"round_trip", {{"kind", target_kind}, {"achieved", achieved}}}});
    return;
  }
  print_kv("method", method);
  print_kv("z_o", fmt(z_o));
  print_kv("level", level_text(lv));
  print_kv("target", std::string(target_kind) + " = " + fmt(target));
  print_kv("c", fmt(c));
  print_kv("round_trip",
           std::string(target_kind) + "(c) = " + fmt(achieved) +
               " (target " + fmt(target) + ")");
}

void setup_design(CLI::App& app) {
  auto args = std::make_shared<DesignArgs>();
  CLI::App* cmd = app.add_subcommand(
      "design",
      "Relative sample size needed for a replication design target");
  args->zo_opt = cmd->add_option("--zo", args->z_o, "Original z statistic");
  args->po_opt =
      cmd->add_option("--po", args->p_o, "Original one-sided p-value");
  args->dmin_opt = cmd->add_option(
      "--dmin", args->d_target, "Target minimum successful relative effect size");
  args->power_opt = cmd->add_option("--power", args->power_target,
                                    "Target conditional power")
                        ->check(CLI::Range(1e-12, 1.0 - 1e-12));
  cmd->add_option("--shrinkage", args->shrinkage,
                  "Assumed shrinkage of the original effect (--power)")
      ->capture_default_str();
  args->method.attach(cmd);
  args->level.attach(cmd);
  cmd->add_flag("--json", args->as_json, "Machine-readable output");
  cmd->callback([args] { run_design(*args); });
}

}  // namespace
}  // namespace repstat_cli

int main(int argc, char** argv) {
  CLI::App app{
      "Replication success assessment: sceptical p-values, the two-trials "
      "rule, power, error rates, and design"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "repstat 1.0.0");

  repstat_cli::setup_assess(app);
  repstat_cli::setup_power(app);
  repstat_cli::setup_rates(app);
  repstat_cli::setup_design(app);
  repstat_cli::register_project_command(app);
  repstat_cli::register_curves_command(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const repstat::InfeasibleDesignError& e) {
    std::fprintf(stderr, "error: %s (limit: %s)\n", e.what(),
                 repstat_cli::fmt(e.limit()).c_str());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
