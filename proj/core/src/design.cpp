#include "repstat/design.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "repstat/errors.hpp"
#include "repstat/normal.hpp"
#include "repstat/power.hpp"
#include "repstat/roots.hpp"

namespace repstat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Bracket for the power inversion, on log c.
constexpr double kCFloor = 1e-8;
const double kLogCLow = std::log(kCFloor);
const double kLogCHigh = std::log(1e6);

void require_positive(double x, const char* name) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw std::domain_error(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

double c_from_dmin_rs(double z_o, double d_target, const SuccessLevel& level) {
  require_positive(d_target, "d_target");
  const KFactor k = k_factor(z_o, level);
  if (k.success_impossible) {
    throw InfeasibleDesignError(
        "the original is not significant at alpha_s; no relative sample size "
        "can achieve replication success",
        kInf);
  }
  const double limit = d_inf(z_o, level);
  const double denom = d_target * d_target * k.value * (k.value - 1.0) - 1.0;
  if (denom <= 0.0) {
    // d_target <= d_inf: even an infinitely large replication requires more.
    throw InfeasibleDesignError(
        "d_target does not exceed the limiting relative effect size", limit);
  }
  return (k.value - 1.0) / denom;
}

double c_from_d_two_trials(double z_o, double d_target, double alpha) {
  require_positive(z_o, "z_o");
  require_positive(d_target, "d_target");
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw std::domain_error("alpha must lie in (0, 0.5)");
  }
  const double ratio = -normal_quantile(alpha) / (d_target * z_o);
  return ratio * ratio;
}

double c_from_power_rs(double z_o, double power_target, double shrinkage,
                       const SuccessLevel& level) {
  if (!(power_target > 0.0 && power_target < 1.0)) {
    throw std::domain_error("power_target must lie in (0, 1)");
  }
  if (!(shrinkage >= 0.0 && shrinkage < 1.0)) {
    throw std::domain_error("shrinkage must lie in [0, 1)");
  }

  // Asymptotic power as c -> inf decides feasibility outright: d_min falls
  // to d_inf, so the limit is 1, 0.5 or 0 as 1 - shrinkage sits above, at,
  // or below d_inf.
  double limit = 0.0;
  if (!k_factor(z_o, level).success_impossible) {
    const double margin = (1.0 - shrinkage) - d_inf(z_o, level);
    limit = margin > 0.0 ? 1.0 : (margin < 0.0 ? 0.0 : 0.5);
  }
  if (power_target >= limit) {
    throw InfeasibleDesignError(
        "power target is not reachable for any relative sample size", limit);
  }
  // As c -> 0 the conditional power falls to alpha_s, not to zero, so
  // targets at or below that floor have no solution either.
  const double floor_power =
      power_rs_conditional({z_o, kCFloor, shrinkage, level});
  if (power_target <= floor_power) {
    throw InfeasibleDesignError(
        "power target is at or below the small-c conditional power floor",
        level.alpha_s);
  }

  const double root = find_root(
      [&](double log_c) {
        const PowerSpec spec{z_o, std::exp(log_c), shrinkage, level};
        return power_rs_conditional(spec) - power_target;
      },
      kLogCLow, kLogCHigh);
  return std::exp(root);
}

double c_from_power_two_trials(double z_o, double power_target,
                               double shrinkage, double alpha) {
  if (!(power_target > 0.0 && power_target < 1.0)) {
    throw std::domain_error("power_target must lie in (0, 1)");
  }
  if (!(shrinkage >= 0.0 && shrinkage < 1.0)) {
    throw std::domain_error("shrinkage must lie in [0, 1)");
  }
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw std::domain_error("alpha must lie in (0, 0.5)");
  }
  require_positive(z_o, "z_o");

  const double z_alpha = -normal_quantile(alpha);
  if (z_o < z_alpha) {
    throw InfeasibleDesignError(
        "the original is not significant at alpha; conditional two-trials "
        "power is zero for every relative sample size",
        0.0);
  }
  const double numerator = z_alpha + normal_quantile(power_target);
  if (numerator <= 0.0) {
    // Conditional two-trials power exceeds alpha for every positive c.
    throw InfeasibleDesignError(
        "power target is below the two-trials conditional power floor",
        alpha);
  }
  const double sqrt_c = numerator / ((1.0 - shrinkage) * z_o);
  return sqrt_c * sqrt_c;
}

}  // namespace repstat
