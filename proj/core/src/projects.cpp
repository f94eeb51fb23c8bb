#include "repstat/projects.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "repstat/errors.hpp"

namespace repstat {

namespace {

constexpr const char* kHeader = "study_id,project,ro,rr,no,nr";

// Splits one CSV line, honoring double-quoted fields with "" escapes, which
// is how spreadsheet exports protect study names containing commas.
std::vector<std::string> split_csv_line(const std::string& line,
                                        std::size_t row) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"' && field.empty()) {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  if (quoted) {
    throw CsvFormatError("unterminated quoted field", row);
  }
  fields.push_back(std::move(field));
  return fields;
}

double parse_double(const std::string& text, const char* name,
                    std::size_t row) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw CsvFormatError(std::string(name) + " is not a number: '" + text +
                             "'",
                         row);
  }
  return value;
}

long parse_count(const std::string& text, const char* name, std::size_t row) {
  long value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw CsvFormatError(std::string(name) + " is not an integer: '" + text +
                             "'",
                         row);
  }
  return value;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  return line;
}

// Quantile with linear interpolation between order statistics (the common
// statistical-software default), so printed quartiles match published ones.
double quantile_type7(const std::vector<double>& sorted, double p) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) {
    return sorted.back();
  }
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

double fisher_transform(double r) {
  if (!std::isfinite(r) || !(r > -1.0 && r < 1.0)) {
    throw std::domain_error(
        "correlation must lie strictly inside (-1, 1) for the Fisher "
        "transform");
  }
  return std::atanh(r);
}

StudyPair pair_from_record(const ProjectRecord& record) {
  if (record.n_o <= 3 || record.n_r <= 3) {
    throw std::domain_error(
        "sample sizes must exceed 3 for a Fisher-scale standard error");
  }
  const double df_o = static_cast<double>(record.n_o - 3);
  const double df_r = static_cast<double>(record.n_r - 3);
  return study_pair_from_z(fisher_transform(record.r_o) * std::sqrt(df_o),
                           fisher_transform(record.r_r) * std::sqrt(df_r),
                           df_r / df_o);
}

std::vector<ProjectRecord> read_records_csv(std::istream& in) {
  std::string line;
  std::size_t row = 0;

  if (!std::getline(in, line)) {
    throw CsvFormatError("empty input, expected header " +
                             std::string(kHeader),
                         1);
  }
  row = 1;
  if (strip_cr(line) != kHeader) {
    throw CsvFormatError("header must be exactly '" + std::string(kHeader) +
                             "'",
                         1);
  }

  std::vector<ProjectRecord> records;
  while (std::getline(in, line)) {
    ++row;
    line = strip_cr(line);
    if (line.empty()) {
      continue;
    }
    const auto fields = split_csv_line(line, row);
    if (fields.size() != 6) {
      throw CsvFormatError("expected 6 fields, found " +
                               std::to_string(fields.size()),
                           row);
    }
    ProjectRecord record;
    record.study_id = fields[0];
    record.project = fields[1];
    record.r_o = parse_double(fields[2], "ro", row);
    record.r_r = parse_double(fields[3], "rr", row);
    record.n_o = parse_count(fields[4], "no", row);
    record.n_r = parse_count(fields[5], "nr", row);
    if (!(record.r_o > -1.0 && record.r_o < 1.0) ||
        !(record.r_r > -1.0 && record.r_r < 1.0)) {
      throw CsvFormatError("correlations must lie strictly inside (-1, 1)",
                           row);
    }
    if (record.n_o <= 3 || record.n_r <= 3) {
      throw CsvFormatError("sample sizes must exceed 3", row);
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<ProjectRecord> read_records_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  return read_records_csv(in);
}

std::vector<StudyAssessment> analyze_records(
    const std::vector<ProjectRecord>& records, const SuccessLevel& level) {
  std::vector<StudyAssessment> out;
  out.reserve(records.size());
  for (const auto& record : records) {
    const StudyPair pair = pair_from_record(record);
    out.push_back({record, pair, assess(pair, level)});
  }
  return out;
}

std::vector<ProjectSummary> summarize_projects(
    const std::vector<StudyAssessment>& assessments) {
  std::vector<std::string> order;
  for (const auto& a : assessments) {
    if (std::find(order.begin(), order.end(), a.record.project) ==
        order.end()) {
      order.push_back(a.record.project);
    }
  }

  std::vector<ProjectSummary> summaries;
  summaries.reserve(order.size());
  for (const auto& name : order) {
    std::vector<double> d_values;
    std::size_t rs = 0;
    std::size_t ttr = 0;
    std::size_t discrepant = 0;
    for (const auto& a : assessments) {
      if (a.record.project != name) {
        continue;
      }
      d_values.push_back(a.result.d);
      rs += a.result.rs_success ? 1 : 0;
      ttr += a.result.ttr_success ? 1 : 0;
      discrepant += a.result.discrepant ? 1 : 0;
    }
    std::sort(d_values.begin(), d_values.end());
    const auto n = d_values.size();
    summaries.push_back({name, n, quantile_type7(d_values, 0.25),
                         quantile_type7(d_values, 0.5),
                         quantile_type7(d_values, 0.75),
                         static_cast<double>(rs) / static_cast<double>(n),
                         static_cast<double>(ttr) / static_cast<double>(n),
                         discrepant});
  }
  return summaries;
}

std::vector<StudyAssessment> discrepant_report(
    const std::vector<StudyAssessment>& assessments) {
  std::vector<StudyAssessment> out;
  for (const auto& a : assessments) {
    if (a.result.discrepant) {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<DinfSweepRow> dinf_sweep(const std::vector<ProjectRecord>& records,
                                     double alpha,
                                     const std::vector<double>& grid) {
  if (records.empty()) {
    throw std::domain_error("no records to sweep over");
  }
  std::vector<StudyPair> pairs;
  pairs.reserve(records.size());
  for (const auto& record : records) {
    pairs.push_back(pair_from_record(record));
  }

  std::vector<DinfSweepRow> rows;
  rows.reserve(grid.size());
  const auto n = static_cast<double>(pairs.size());
  for (const double target : grid) {
    const SuccessLevel level = level_from_limiting_res(alpha, target);
    const double matched_alpha = alpha_prime(alpha, target);
    std::size_t rs = 0;
    std::size_t ttr = 0;
    std::size_t both = 0;
    for (const auto& pair : pairs) {
      const bool rs_ok = success_rs(pair, level);
      const bool ttr_ok = success_two_trials(pair, matched_alpha);
      rs += rs_ok ? 1 : 0;
      ttr += ttr_ok ? 1 : 0;
      both += (rs_ok && ttr_ok) ? 1 : 0;
    }
    rows.push_back({target, matched_alpha, static_cast<double>(rs) / n,
                    static_cast<double>(ttr) / n,
                    static_cast<double>(both) / n});
  }
  return rows;
}

}  // namespace repstat
