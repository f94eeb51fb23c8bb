#pragma once

#include <functional>

namespace repstat {

struct QuadratureResult {
  double value;
  double abs_error_estimate;
  long evaluations;
};

/// Adaptive quadrature of f over the finite interval [lower, upper].
///
/// Each panel is handled by a fixed Gauss-Kronrod 7-15 rule; the panel with
/// the largest error estimate is bisected until the summed estimate drops
/// under max(abs_tol, rel_tol * |integral|).  Throws std::invalid_argument
/// when lower >= upper or a tolerance is not positive, and ConvergenceError
/// (carrying the best estimate so far) when the evaluation budget runs out
/// first.
QuadratureResult integrate(const std::function<double(double)>& f,
                           double lower, double upper,
                           double abs_tol = 1e-12, double rel_tol = 1e-9,
                           long max_evaluations = 1000000);

}  // namespace repstat
