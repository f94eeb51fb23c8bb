#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "common.hpp"
#include "json.hpp"
#include "repstat/projects.hpp"
#include "repstat/sceptical.hpp"

using nlohmann::json;

namespace repstat_cli {
namespace {

constexpr const char* kConflictMarker = "undefined (opposite directions)";

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

struct ProjectArgs {
  LevelOptions level;
  std::string input;
  std::string grid_text;
  CLI::Option* grid_opt = nullptr;
  bool as_json = false;
  bool as_csv = false;
};

json study_json(const repstat::StudyAssessment& s) {
  const repstat::AssessmentResult& r = s.result;
  return {{"study_id", s.record.study_id},
          {"project", s.record.project},
          {"r_o", s.record.r_o},
          {"r_r", s.record.r_r},
          {"n_o", s.record.n_o},
          {"n_r", s.record.n_r},
          {"z_o", s.pair.z_o},
          {"z_r", s.pair.z_r},
          {"c", s.pair.c},
          {"d", json_num(r.d)},
          {"p_o", r.p_o},
          {"p_r", r.p_r},
          {"p_s", r.p_s ? json(*r.p_s) : json(nullptr)},
          {"p_s_tilde", r.p_s_tilde ? json(*r.p_s_tilde) : json(nullptr)},
          {"d_min", json_num(r.d_min)},
          {"z_r_min", json_num(r.z_r_min)},
          {"rs_success", r.rs_success},
          {"ttr_success", r.ttr_success},
          {"discrepant", r.discrepant}};
}

void emit_sweep(const std::vector<repstat::DinfSweepRow>& rows,
                const ProjectArgs& a) {
  if (a.as_json) {
    json out = {{"command", "project"},
                {"analysis", "dinf_sweep"},
                {"alpha", a.level.alpha},
                {"rows", json::array()}};
    for (const auto& row : rows)
      out["rows"].push_back({{"d_inf", row.d_inf},
                             {"alpha_prime", row.alpha_prime},
                             {"rs_rate", row.rs_rate},
                             {"ttr_rate", row.ttr_rate},
                             {"both_rate", row.both_rate}});
    emit_json(out);
    return;
  }
  if (a.as_csv) {
    std::printf("d_inf,alpha_prime,rs_rate,ttr_rate,both_rate\n");
    for (const auto& row : rows)
      std::printf("%s,%s,%s,%s,%s\n", csv_num(row.d_inf).c_str(),
                  csv_num(row.alpha_prime).c_str(),
                  csv_num(row.rs_rate).c_str(), csv_num(row.ttr_rate).c_str(),
                  csv_num(row.both_rate).c_str());
    return;
  }
  std::printf("%-8s %-12s %-9s %-9s %-9s\n", "d_inf", "alpha_prime",
              "rs_rate", "ttr_rate", "both_rate");
  for (const auto& row : rows)
    std::printf("%-8s %-12s %-9s %-9s %-9s\n", fmt(row.d_inf).c_str(),
                fmt(row.alpha_prime).c_str(), fmt(row.rs_rate).c_str(),
                fmt(row.ttr_rate).c_str(), fmt(row.both_rate).c_str());
}

void emit_analysis(const std::vector<repstat::StudyAssessment>& studies,
                   const repstat::SuccessLevel& lv, const ProjectArgs& a) {
  const std::vector<repstat::ProjectSummary> summaries =
      repstat::summarize_projects(studies);
  const std::vector<repstat::StudyAssessment> discrepant =
      repstat::discrepant_report(studies);

  if (a.as_json) {
    json out = {{"command", "project"},
                {"analysis", "assessment"},
                {"level", level_json(lv)},
                {"n_studies", studies.size()},
                {"studies", json::array()},
                {"projects", json::array()},
                {"discrepant", json::array()}};
    for (const auto& s : studies) out["studies"].push_back(study_json(s));
    for (const auto& p : summaries)
      out["projects"].push_back({{"project", p.project},
                                 {"n_studies", p.n_studies},
                                 {"d_q1", p.d_q1},
                                 {"d_median", p.d_median},
                                 {"d_q3", p.d_q3},
                                 {"rs_rate", p.rs_rate},
                                 {"ttr_rate", p.ttr_rate},
                                 {"discrepant_count", p.discrepant_count}});
    for (const auto& s : discrepant)
      out["discrepant"].push_back(s.record.study_id);
    emit_json(out);
    return;
  }

  if (a.as_csv) {
    std::printf(
        "study_id,project,c,d,p_o,p_r,p_s,p_s_tilde,rs_success,ttr_success,"
        "discrepant\n");
    for (const auto& s : studies) {
      const repstat::AssessmentResult& r = s.result;
      std::printf("%s,%s,%s,%s,%s,%s,%s,%s,%s,%s,%s\n",
                  csv_escape(s.record.study_id).c_str(),
                  csv_escape(s.record.project).c_str(),
                  csv_num(s.pair.c).c_str(), csv_num(r.d).c_str(),
                  csv_num(r.p_o).c_str(), csv_num(r.p_r).c_str(),
                  (r.p_s ? csv_num(*r.p_s) : std::string("")).c_str(),
                  (r.p_s_tilde ? csv_num(*r.p_s_tilde) : std::string(""))
                      .c_str(),
                  fmt_bool(r.rs_success).c_str(),
                  fmt_bool(r.ttr_success).c_str(),
                  fmt_bool(r.discrepant).c_str());
    }
    return;
  }

  print_kv("studies", std::to_string(studies.size()));
  print_kv("level", level_text(lv));
  std::printf("\n%-28s %5s %8s %9s %5s %7s %9s %7s\n", "project", "n",
              "rs_rate", "ttr_rate", "disc", "d_q1", "d_median", "d_q3");
  for (const auto& p : summaries)
    std::printf("%-28s %5zu %8s %9s %5zu %7s %9s %7s\n", p.project.c_str(),
                p.n_studies, fmt(p.rs_rate).c_str(), fmt(p.ttr_rate).c_str(),
                p.discrepant_count, fmt(p.d_q1).c_str(),
                fmt(p.d_median).c_str(), fmt(p.d_q3).c_str());

  std::printf("\ndiscrepant studies (%zu):\n", discrepant.size());
  for (const auto& s : discrepant) {
    const repstat::AssessmentResult& r = s.result;
    std::printf(
        "  %-24s %-20s c=%-8s d=%-8s p_o=%-8s p_r=%-8s p_s_tilde=%-8s "
        "rs=%s ttr=%s\n",
        s.record.study_id.c_str(), s.record.project.c_str(),
        fmt(s.pair.c).c_str(), fmt(r.d).c_str(), fmt(r.p_o).c_str(),
        fmt(r.p_r).c_str(),
        (r.p_s_tilde ? fmt(*r.p_s_tilde) : std::string(kConflictMarker))
            .c_str(),
        fmt_bool(r.rs_success).c_str(), fmt_bool(r.ttr_success).c_str());
  }
}

void run_project(const ProjectArgs& a) {
  if (a.as_json && a.as_csv)
    throw CLI::ValidationError("project", "--json and --csv are exclusive");
  const std::vector<repstat::ProjectRecord> records =
      repstat::read_records_csv_file(a.input);

  if (a.grid_opt->count() > 0) {
    emit_sweep(repstat::dinf_sweep(records, a.level.alpha,
                                   parse_grid(a.grid_text)),
               a);
    return;
  }
  const repstat::SuccessLevel lv = a.level.resolve();
  emit_analysis(repstat::analyze_records(records, lv), lv, a);
}

}  // namespace

void register_project_command(CLI::App& app) {
  auto args = std::make_shared<ProjectArgs>();
  CLI::App* cmd = app.add_subcommand(
      "project", "Assess every study pair in a replication-project CSV");
  cmd->add_option("--input", args->input,
                  "CSV with header study_id,project,ro,rr,no,nr")
      ->required()
      ->check(CLI::ExistingFile);
  args->grid_opt = cmd->add_option(
      "--dinf-grid", args->grid_text,
      "Sweep success rates over limiting relative effect sizes a:b:step");
  args->level.attach(cmd);
  cmd->add_flag("--json", args->as_json, "Machine-readable output");
  cmd->add_flag("--csv", args->as_csv, "Per-study CSV output");
  cmd->callback([args] { run_project(*args); });
}

}  // namespace repstat_cli
