#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "repstat/sceptical.hpp"

namespace repstat_cli {

// Text reports round through this; JSON carries full precision.  Keeping a
// single formatter is what makes the "text and JSON agree" invariant cheap
// to audit.
inline std::string fmt(double x) {
  if (std::isnan(x)) return "undefined";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline std::string fmt_bool(bool b) { return b ? "true" : "false"; }

// Full-precision rendering for CSV cells (shortest form that still parses
// back to a close double; %.12g keeps grid values like 0.0005 readable).
inline std::string csv_num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline void print_kv(const char* key, const std::string& value) {
  std::printf("%-14s %s\n", key, value.c_str());
}

// JSON double that degrades to null for non-finite values so downstream
// parsers never see +inf smuggled through as a string.
inline nlohmann::json json_num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

inline const char* calibration_name(repstat::LevelCalibration c) {
  switch (c) {
    case repstat::LevelCalibration::nominal:
      return "nominal";
    case repstat::LevelCalibration::golden:
      return "golden";
    case repstat::LevelCalibration::limiting_res:
      return "limiting_res";
    case repstat::LevelCalibration::custom:
      return "custom";
  }
  return "unknown";
}

// --alpha plus the calibration switches shared by every scientific command.
struct LevelOptions {
  double alpha = 0.025;
  std::string name = "golden";
  double dinf = 1.0;
  CLI::Option* dinf_opt = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "One-sided significance level")
        ->check(CLI::Range(1e-12, 0.5))
        ->capture_default_str();
    auto* level_opt = cmd->add_option("--level", name, "Level calibration")
                          ->check(CLI::IsMember({"nominal", "golden"}))
                          ->capture_default_str();
    dinf_opt =
        cmd->add_option("--dinf", dinf,
                        "Calibrate to this limiting relative effect size "
                        "instead of a named level")
            ->check(CLI::PositiveNumber);
    dinf_opt->excludes(level_opt);
  }

  repstat::SuccessLevel resolve() const {
    if (dinf_opt != nullptr && dinf_opt->count() > 0)
      return repstat::level_from_limiting_res(alpha, dinf);
    if (name == "nominal") return repstat::nominal_level(alpha);
    return repstat::golden_level(alpha);
  }
};

inline nlohmann::json level_json(const repstat::SuccessLevel& lv) {
  return {{"calibration", calibration_name(lv.calibration)},
          {"alpha", lv.alpha},
          {"alpha_s", lv.alpha_s},
          {"z_alpha", lv.z_alpha},
          {"z_alpha_s", lv.z_alpha_s},
          {"d_inf_target", json_num(lv.d_inf_target)}};
}

inline std::string level_text(const repstat::SuccessLevel& lv) {
  return std::string(calibration_name(lv.calibration)) +
         " (alpha=" + fmt(lv.alpha) + ", alpha_s=" + fmt(lv.alpha_s) + ")";
}

inline void emit_json(const nlohmann::json& j) {
  std::printf("%s\n", j.dump(2).c_str());
}

// Parses "a:b:step" into the closed grid {a, a+step, ..., <= b} with a
// small tolerance so b itself survives accumulated representation error.
inline std::vector<double> parse_grid(const std::string& text) {
  double a = 0, b = 0, step = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3)
    throw std::invalid_argument("grid must look like a:b:step, got '" + text +
                                "'");
  if (!(step > 0) || !(b >= a))
    throw std::invalid_argument("grid needs b >= a and step > 0, got '" +
                                text + "'");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double x = a + i * step;
    if (x > b + step * 1e-9) break;
    grid.push_back(x);
  }
  return grid;
}

void register_project_command(CLI::App& app);
void register_curves_command(CLI::App& app);

}  // namespace repstat_cli
