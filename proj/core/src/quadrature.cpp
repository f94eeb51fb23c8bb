#include "repstat/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include "repstat/errors.hpp"

namespace repstat {

namespace {

// Gauss-Kronrod 7-15 abscissae (positive half) and weights; the embedded
// 7-point Gauss rule sits on the odd-indexed abscissae.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lower;
  double upper;
  double value;  // Kronrod estimate
  double error;  // |Kronrod - Gauss|, a deliberately conservative estimate

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double lower,
                     double upper) {
  const double center = 0.5 * (lower + upper);
  const double half = 0.5 * (upper - lower);

  const double fc = f(center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double offset = half * kNodes[j];
    const double pair_sum = f(center - offset) + f(center + offset);
    kronrod += kKronrodWeights[j] * pair_sum;
    if (j % 2 == 1) {
      gauss += kGaussWeights[j / 2] * pair_sum;
    }
  }
  kronrod *= half;
  gauss *= half;

  if (!std::isfinite(kronrod)) {
    throw std::runtime_error("integrand returned a non-finite value");
  }
  return {lower, upper, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f,
                           double lower, double upper, double abs_tol,
                           double rel_tol, long max_evaluations) {
  if (!(std::isfinite(lower) && std::isfinite(upper)) || lower >= upper) {
    throw std::invalid_argument("integration interval must be finite with lower < upper");
  }
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
  if (max_evaluations < 15) {
    throw std::invalid_argument("evaluation budget below one panel");
  }

  std::priority_queue<Panel> panels;
  panels.push(evaluate_panel(f, lower, upper));
  long evaluations = 15;
  double total_value = panels.top().value;
  double total_error = panels.top().error;

  // Split the worst panel until the summed error estimate is inside the
  // requested tolerance.
  while (total_error > std::max(abs_tol, rel_tol * std::abs(total_value))) {
    if (evaluations + 30 > max_evaluations) {
      throw ConvergenceError("quadrature evaluation budget exhausted",
                             total_value, total_error, evaluations);
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lower + worst.upper);
    if (!(mid > worst.lower && mid < worst.upper)) {
      // The panel has collapsed to rounding resolution; its error estimate
      // cannot improve any further.
      throw ConvergenceError("quadrature stalled at rounding resolution",
                             total_value, total_error, evaluations);
    }
    const Panel left = evaluate_panel(f, worst.lower, mid);
    const Panel right = evaluate_panel(f, mid, worst.upper);
    evaluations += 30;
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  return {total_value, total_error, evaluations};
}

}  // namespace repstat
