#pragma once

#include <optional>

namespace repstat {

/// Golden ratio (sqrt(5) + 1) / 2; the unique K with K * (K - 1) = 1, which
/// is what makes the golden success level the weakest recalibration that
/// still keeps the required relative effect size above 1 at every K.
inline constexpr double golden_ratio = 1.6180339887498948482;

/// A matched original/replication pair on the z scale.
///
/// z_o and z_r are the two one-sided z statistics and c = sigma_o^2 /
/// sigma_r^2 is the squared ratio of their standard errors (the relative
/// sample size in the equal-variance case).  c must be positive and all
/// fields finite.
struct StudyPair {
  double z_o;
  double z_r;
  double c;
};

/// Validating constructors for the three usual input routes.  Each throws
/// std::domain_error on out-of-range arguments.
StudyPair study_pair_from_z(double z_o, double z_r, double c);
StudyPair study_pair_from_p(double p_o, double p_r, double c);
StudyPair study_pair_from_estimates(double est_o, double se_o, double est_r,
                                    double se_r);

enum class LevelCalibration { nominal, golden, limiting_res, custom };

/// A one-sided significance level alpha together with the level alpha_s at
/// which the sceptical p-value is compared.  z_alpha and z_alpha_s cache the
/// matching normal quantiles since every downstream operation needs them.
struct SuccessLevel {
  double alpha;
  double alpha_s;
  double z_alpha;
  double z_alpha_s;
  LevelCalibration calibration;
  /// Limiting relative effect size the calibration targets: 1 for golden,
  /// the requested value for limiting_res, NaN otherwise.
  double d_inf_target;
};

/// alpha_s = alpha: the uncalibrated comparison.  It is strictly more
/// demanding than two significant studies at alpha.
SuccessLevel nominal_level(double alpha);

/// The golden level alpha_s = 1 - Phi(z_alpha / sqrt(golden_ratio)).  It is
/// the largest alpha_s for which any significant original still needs a
/// replication at least as convincing (d >= 1 in the limit c -> inf).
SuccessLevel golden_level(double alpha);

/// Calibration pinned to a limiting relative effect size d_inf: solves
/// K * (K - 1) = 1 / d_inf^2 for K and sets alpha_s = 1 - Phi(z_alpha /
/// sqrt(K)).  d_inf = 1 recovers the golden level.
SuccessLevel level_from_limiting_res(double alpha, double d_inf);

/// Explicit alpha_s, for sensitivity analyses.
SuccessLevel custom_level(double alpha, double alpha_s);

/// The significance level alpha' at which the golden-level sceptical
/// p-value with limiting relative effect size d_inf behaves like the
/// two-trials rule at alpha': alpha' = 1 - Phi(z_alpha * sqrt(golden_ratio
/// / K)) with K as in level_from_limiting_res.  d_inf = 1 gives back alpha.
double alpha_prime(double alpha, double d_inf);

/// Solution of the sceptical-p defining equation.
struct ScepticalZ {
  /// z_s^2: the unique root of (z_o^2/x - 1)(z_r^2/x - 1) = c below
  /// min(z_o^2, z_r^2); zero when either input z is zero.
  double z_squared;
  /// Companion ratio K = z_o^2 / z_s^2 (infinite at the boundary).
  double k;
  /// True when an input z was zero, making z_squared a boundary value.
  bool boundary;
};

/// Solves the defining equation via the stable quadratic (the linear branch
/// is taken for |c - 1| < 1e-9).  Signs of z_o and z_r are immaterial here;
/// only squares enter.
ScepticalZ sceptical_z_squared(double z_o, double z_r, double c);

/// Relative effect size d = (z_r / z_o) / sqrt(c), i.e. the replication
/// estimate over the original one.  Throws std::domain_error when z_o == 0.
double relative_effect_size(double z_o, double z_r, double c);

/// One-sided sceptical p-value p_s = 1 - Phi(z_s).  Requires both z
/// statistics to point the same way (DirectionConflictError otherwise); a
/// zero z is the boundary case and yields exactly 0.5.
double sceptical_p(double z_o, double z_r, double c);

/// Golden-recalibrated sceptical p-value 1 - Phi(z_s * sqrt(golden_ratio)),
/// directly comparable to alpha.  Same domain as sceptical_p.
double recalibrated_sceptical_p(double z_o, double z_r, double c);

/// K = z_o^2 / z_alpha_s^2.  success_impossible flags K <= 1, in which case
/// no replication outcome whatsoever can achieve success at this level.
struct KFactor {
  double value;
  bool success_impossible;
};

KFactor k_factor(double z_o, const SuccessLevel& level);

/// Smallest replication z statistic that achieves success at the given
/// level: z_alpha_s * sqrt(1 + c / (K - 1)).  +infinity when K <= 1.
double z_r_min(double z_o, double c, const SuccessLevel& level);

/// Smallest successful relative effect size, sqrt(1 + c / (K - 1)) /
/// sqrt(c K).  +infinity when K <= 1.
double d_min(double z_o, double c, const SuccessLevel& level);

/// Limit of d_min as c grows without bound: 1 / sqrt(K (K - 1)); the
/// relative effect size that even infinitely precise replications must
/// reach.  +infinity when K <= 1.
double d_inf(double z_o, const SuccessLevel& level);

/// Replication success judged by the sceptical p-value: both estimates in
/// the same direction and p_s <= alpha_s (equivalently z_r >= z_r_min, or
/// d >= d_min).  All comparisons inclusive.
bool success_rs(const StudyPair& pair, const SuccessLevel& level);

/// The two-trials rule: z_o >= z_alpha and z_r >= z_alpha, both inclusive.
bool success_two_trials(const StudyPair& pair, double alpha);

/// Everything the assessment report needs for one pair.  Pairs with both z
/// statistics negative are mirrored to positive before analysis; a genuine
/// direction conflict leaves p_s / p_s_tilde unset instead of throwing.
struct AssessmentResult {
  double d;
  double shrinkage_s;  // 1 - d
  double p_o;
  double p_r;
  std::optional<double> p_s;
  std::optional<double> p_s_tilde;
  double d_min;    // +infinity when success is impossible at this level
  double d_inf;    // +infinity when success is impossible at any c
  double z_r_min;  // +infinity when success is impossible at this level
  bool rs_success;
  bool ttr_success;
  bool discrepant;  // the two methods disagree
};

AssessmentResult assess(const StudyPair& pair, const SuccessLevel& level);

}  // namespace repstat
