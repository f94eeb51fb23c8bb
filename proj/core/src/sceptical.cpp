#include "repstat/sceptical.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "repstat/errors.hpp"
#include "repstat/normal.hpp"
#include "repstat/roots.hpp"

namespace repstat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Below this distance from c = 1 the quadratic in the defining equation is
// numerically degenerate and the exact c = 1 branch takes over.
constexpr double kLinearBranchTol = 1e-9;

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(name) + " must be finite");
  }
}

void require_variance_ratio(double c) {
  if (!std::isfinite(c) || !(c > 0.0)) {
    throw std::domain_error("variance ratio c must be positive and finite");
  }
}

void require_level_alpha(double alpha, const char* name) {
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw std::domain_error(std::string(name) +
                            " must lie in (0, 0.5) for a one-sided test");
  }
}

double upper_quantile(double p) { return -normal_quantile(p); }

// K solving K (K - 1) = 1 / d_inf^2, the recalibration factor that pins the
// limiting relative effect size at d_inf.
double k_from_limiting_res(double d_inf) {
  if (!std::isfinite(d_inf) || !(d_inf > 0.0)) {
    throw std::domain_error("limiting relative effect size must be positive");
  }
  return 0.5 + std::sqrt(0.25 + 1.0 / (d_inf * d_inf));
}

bool opposite_directions(double z_o, double z_r) {
  return z_o != 0.0 && z_r != 0.0 &&
         std::signbit(z_o) != std::signbit(z_r);
}

}  // namespace

StudyPair study_pair_from_z(double z_o, double z_r, double c) {
  require_finite(z_o, "z_o");
  require_finite(z_r, "z_r");
  require_variance_ratio(c);
  return {z_o, z_r, c};
}

StudyPair study_pair_from_p(double p_o, double p_r, double c) {
  if (!(p_o > 0.0 && p_o < 1.0) || !(p_r > 0.0 && p_r < 1.0)) {
    throw std::domain_error("one-sided p-values must lie in (0, 1)");
  }
  return study_pair_from_z(upper_quantile(p_o), upper_quantile(p_r), c);
}

StudyPair study_pair_from_estimates(double est_o, double se_o, double est_r,
                                    double se_r) {
  require_finite(est_o, "est_o");
  require_finite(est_r, "est_r");
  if (!std::isfinite(se_o) || !(se_o > 0.0) || !std::isfinite(se_r) ||
      !(se_r > 0.0)) {
    throw std::domain_error("standard errors must be positive and finite");
  }
  const double ratio = se_o / se_r;
  return study_pair_from_z(est_o / se_o, est_r / se_r, ratio * ratio);
}

SuccessLevel nominal_level(double alpha) {
  require_level_alpha(alpha, "alpha");
  const double z = upper_quantile(alpha);
  return {alpha, alpha, z, z, LevelCalibration::nominal, kNaN};
}

SuccessLevel golden_level(double alpha) {
  require_level_alpha(alpha, "alpha");
  const double z_alpha = upper_quantile(alpha);
  const double z_alpha_s = z_alpha / std::sqrt(golden_ratio);
  return {alpha,     normal_sf(z_alpha_s),       z_alpha,
          z_alpha_s, LevelCalibration::golden, 1.0};
}

SuccessLevel level_from_limiting_res(double alpha, double d_inf) {
  require_level_alpha(alpha, "alpha");
  const double k = k_from_limiting_res(d_inf);
  const double z_alpha = upper_quantile(alpha);
  const double z_alpha_s = z_alpha / std::sqrt(k);
  return {alpha,     normal_sf(z_alpha_s),            z_alpha,
          z_alpha_s, LevelCalibration::limiting_res, d_inf};
}

SuccessLevel custom_level(double alpha, double alpha_s) {
  require_level_alpha(alpha, "alpha");
  require_level_alpha(alpha_s, "alpha_s");
  return {alpha,
          alpha_s,
          upper_quantile(alpha),
          upper_quantile(alpha_s),
          LevelCalibration::custom,
          kNaN};
}

double alpha_prime(double alpha, double d_inf) {
  require_level_alpha(alpha, "alpha");
  const double k = k_from_limiting_res(d_inf);
  return normal_sf(upper_quantile(alpha) * std::sqrt(golden_ratio / k));
}

ScepticalZ sceptical_z_squared(double z_o, double z_r, double c) {
  require_finite(z_o, "z_o");
  require_finite(z_r, "z_r");
  require_variance_ratio(c);

  const double zo2 = z_o * z_o;
  const double zr2 = z_r * z_r;
  if (zo2 == 0.0 || zr2 == 0.0) {
    return {0.0, kInf, true};
  }

  double x;
  if (std::abs(c - 1.0) < kLinearBranchTol) {
    // The quadratic collapses to a linear equation: half the harmonic mean.
    x = zo2 * zr2 / (zo2 + zr2);
  } else {
    const QuadraticRoots roots =
        solve_quadratic_stable(c - 1.0, zo2 + zr2, -zo2 * zr2);
    // The product of roots is -zo2 zr2 / (c - 1): for c > 1 exactly one root
    // is positive, for c < 1 both are and the admissible one is the smaller.
    x = roots.lower > 0.0 ? roots.lower : roots.upper;
  }
  assert(x > 0.0 && x <= std::min(zo2, zr2) * (1.0 + 1e-12));
  return {x, zo2 / x, false};
}

double relative_effect_size(double z_o, double z_r, double c) {
  require_finite(z_o, "z_o");
  require_finite(z_r, "z_r");
  require_variance_ratio(c);
  if (z_o == 0.0) {
    throw std::domain_error(
        "relative effect size is undefined for a null original result");
  }
  return z_r / (z_o * std::sqrt(c));
}

double sceptical_p(double z_o, double z_r, double c) {
  if (opposite_directions(z_o, z_r)) {
    throw DirectionConflictError(
        "original and replication point in opposite directions; the "
        "one-sided sceptical p-value is undefined");
  }
  return normal_sf(std::sqrt(sceptical_z_squared(z_o, z_r, c).z_squared));
}

double recalibrated_sceptical_p(double z_o, double z_r, double c) {
  if (opposite_directions(z_o, z_r)) {
    throw DirectionConflictError(
        "original and replication point in opposite directions; the "
        "one-sided sceptical p-value is undefined");
  }
  const double z_s = std::sqrt(sceptical_z_squared(z_o, z_r, c).z_squared);
  return normal_sf(z_s * std::sqrt(golden_ratio));
}

KFactor k_factor(double z_o, const SuccessLevel& level) {
  require_finite(z_o, "z_o");
  const double ratio = z_o / level.z_alpha_s;
  const double k = ratio * ratio;
  return {k, k <= 1.0};
}

double z_r_min(double z_o, double c, const SuccessLevel& level) {
  require_variance_ratio(c);
  const KFactor k = k_factor(z_o, level);
  if (k.success_impossible) {
    return kInf;
  }
  return level.z_alpha_s * std::sqrt(1.0 + c / (k.value - 1.0));
}

double d_min(double z_o, double c, const SuccessLevel& level) {
  require_variance_ratio(c);
  const KFactor k = k_factor(z_o, level);
  if (k.success_impossible) {
    return kInf;
  }
  return std::sqrt(1.0 + c / (k.value - 1.0)) / std::sqrt(c * k.value);
}

double d_inf(double z_o, const SuccessLevel& level) {
  const KFactor k = k_factor(z_o, level);
  if (k.success_impossible) {
    return kInf;
  }
  return 1.0 / std::sqrt(k.value * (k.value - 1.0));
}

bool success_rs(const StudyPair& pair, const SuccessLevel& level) {
  double z_o = pair.z_o;
  double z_r = pair.z_r;
  if (z_o < 0.0 && z_r < 0.0) {
    z_o = -z_o;
    z_r = -z_r;
  }
  if (opposite_directions(z_o, z_r)) {
    return false;
  }
  // A zero z gives the boundary p_s = 0.5, which never clears alpha_s < 0.5,
  // so the single comparison below covers that case too.
  return sceptical_p(z_o, z_r, pair.c) <= level.alpha_s;
}

bool success_two_trials(const StudyPair& pair, double alpha) {
  require_level_alpha(alpha, "alpha");
  double z_o = pair.z_o;
  double z_r = pair.z_r;
  if (z_o < 0.0 && z_r < 0.0) {
    z_o = -z_o;
    z_r = -z_r;
  }
  const double z_alpha = upper_quantile(alpha);
  return z_o >= z_alpha && z_r >= z_alpha;
}

AssessmentResult assess(const StudyPair& pair, const SuccessLevel& level) {
  require_variance_ratio(pair.c);
  double z_o = pair.z_o;
  double z_r = pair.z_r;
  // Mirror pairs whose original points negative, so one-sided p-values are
  // computed in the direction of the original finding; a joint flip leaves
  // the relative effect size unchanged.
  if (z_o < 0.0) {
    z_o = -z_o;
    z_r = -z_r;
  }
  const StudyPair oriented{z_o, z_r, pair.c};

  AssessmentResult out{};
  out.d = z_o == 0.0 ? kNaN : z_r / (z_o * std::sqrt(pair.c));
  out.shrinkage_s = 1.0 - out.d;
  out.p_o = normal_sf(z_o);
  out.p_r = normal_sf(z_r);
  if (!opposite_directions(z_o, z_r)) {
    out.p_s = sceptical_p(z_o, z_r, pair.c);
    out.p_s_tilde = recalibrated_sceptical_p(z_o, z_r, pair.c);
  }
  out.d_min = d_min(z_o, pair.c, level);
  out.d_inf = d_inf(z_o, level);
  out.z_r_min = z_r_min(z_o, pair.c, level);
  out.rs_success = success_rs(oriented, level);
  out.ttr_success = success_two_trials(oriented, level.alpha);
  out.discrepant = out.rs_success != out.ttr_success;
  return out;
}

}  // namespace repstat
