#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "repstat/sceptical.hpp"

namespace repstat {

/// One study of a replication project: correlation-scale effect estimates
/// r_o / r_r with their sample sizes.  |r| < 1 and n > 3 are required so
/// the Fisher transform and its standard error exist.
struct ProjectRecord {
  std::string study_id;
  std::string project;
  double r_o;
  double r_r;
  long n_o;
  long n_r;
};

/// Fisher z transform atanh(r); throws std::domain_error for |r| >= 1.
double fisher_transform(double r);

/// The z-scale pair for a record: z = atanh(r) * sqrt(n - 3) per study and
/// c = (n_r - 3) / (n_o - 3).
StudyPair pair_from_record(const ProjectRecord& record);

/// Reads records from CSV with the exact header
/// study_id,project,ro,rr,no,nr.  Violations throw CsvFormatError with the
/// offending 1-based row number (the header is row 1).  Blank lines are
/// ignored.
std::vector<ProjectRecord> read_records_csv(std::istream& in);
std::vector<ProjectRecord> read_records_csv_file(const std::string& path);

/// One record's assessment next to its inputs.
struct StudyAssessment {
  ProjectRecord record;
  StudyPair pair;
  AssessmentResult result;
};

/// Per-project aggregate: quartiles of the relative effect size (computed
/// on the Fisher z scale, linear interpolation between order statistics)
/// and the two success proportions.
struct ProjectSummary {
  std::string project;
  std::size_t n_studies;
  double d_q1;
  double d_median;
  double d_q3;
  double rs_rate;
  double ttr_rate;
  std::size_t discrepant_count;
};

/// Assesses every record at the given level, preserving input order.
std::vector<StudyAssessment> analyze_records(
    const std::vector<ProjectRecord>& records, const SuccessLevel& level);

/// Groups assessments by project name (first-appearance order) and
/// summarizes each group.
std::vector<ProjectSummary> summarize_projects(
    const std::vector<StudyAssessment>& assessments);

/// The studies on which the sceptical p-value and the two-trials rule
/// disagree, in input order.
std::vector<StudyAssessment> discrepant_report(
    const std::vector<StudyAssessment>& assessments);

/// One row of the limiting-relative-effect-size sensitivity sweep: the
/// success proportions when the level is recalibrated to target d_inf
/// (replication success) and to the matching alpha' (two-trials rule).
struct DinfSweepRow {
  double d_inf;
  double alpha_prime;
  double rs_rate;
  double ttr_rate;
  double both_rate;
};

std::vector<DinfSweepRow> dinf_sweep(const std::vector<ProjectRecord>& records,
                                     double alpha,
                                     const std::vector<double>& grid);

}  // namespace repstat
