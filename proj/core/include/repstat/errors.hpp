#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace repstat {

/// Quadrature ran out of its evaluation budget before reaching the requested
/// tolerance.  The best estimate available at that point travels with the
/// exception so callers can still inspect it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate,
                   double error_estimate, long evaluations)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate),
        evaluations_(evaluations) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }
  long evaluations() const noexcept { return evaluations_; }

 private:
  double best_estimate_;
  double error_estimate_;
  long evaluations_;
};

/// find_root was handed an interval whose endpoints do not straddle a root.
class BracketingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// solve_quadratic_stable met a genuinely negative discriminant.
class NoRealRootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The original and replication estimates point in opposite directions, so a
/// one-sided sceptical p-value is undefined (and replication success is
/// impossible by definition).
class DirectionConflictError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A requested design target cannot be reached for any relative sample size.
/// The unreachable bound (e.g. the limiting relative effect size, or the
/// asymptotic power) travels with the exception.
class InfeasibleDesignError : public std::domain_error {
 public:
  InfeasibleDesignError(const std::string& what, double limit)
      : std::domain_error(what), limit_(limit) {}

  /// The bound the target would have to beat.
  double limit() const noexcept { return limit_; }

 private:
  double limit_;
};

/// Malformed replication-data CSV input; row() is 1-based and counts the
/// header as row 1.
class CsvFormatError : public std::runtime_error {
 public:
  CsvFormatError(const std::string& what, std::size_t row)
      : std::runtime_error("row " + std::to_string(row) + ": " + what),
        row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace repstat
