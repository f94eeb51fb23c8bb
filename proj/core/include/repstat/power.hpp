#pragma once

#include "repstat/sceptical.hpp"

namespace repstat {

/// Inputs for a replication power calculation: the original z statistic
/// (positive direction), the relative sample size c, an optional shrinkage
/// s in [0, 1) applied to the assumed true effect (conditional view only),
/// and the success level.
struct PowerSpec {
  double z_o;
  double c;
  double shrinkage = 0.0;
  SuccessLevel level;
};

/// PowerSpec with z_o derived from the original one-sided p-value.
PowerSpec power_spec_from_p(double p_o, double c, double shrinkage,
                            const SuccessLevel& level);

/// Probability of replication success when the true effect is taken to be
/// (1 - s) times the original estimate: Phi(sqrt(c) * z_o * (1 - s -
/// d_min)).  Exactly 0 when success is impossible (K <= 1).
double power_rs_conditional(const PowerSpec& spec);

/// Probability of replication success under the predictive view, where the
/// uncertainty of the original estimate is propagated: Phi(z_o * (1 -
/// d_min) / sqrt(1 + 1/c)).  Exactly 0 when K <= 1.  Shrinkage has no
/// predictive analogue here; spec.shrinkage > 0 throws
/// std::invalid_argument.
double power_rs_predictive(const PowerSpec& spec);

/// Conditional power of the two-trials rule: Phi(sqrt(c) * (1 - s) * z_o -
/// z_alpha) when the original was significant at level.alpha, else exactly
/// 0 (the rule already failed).
double power_2tr_conditional(const PowerSpec& spec);

/// Predictive power of the two-trials rule: Phi((sqrt(c) * z_o - z_alpha) /
/// sqrt(1 + c)) when the original was significant, else exactly 0.
/// Shrinkage > 0 throws std::invalid_argument.
double power_2tr_predictive(const PowerSpec& spec);

}  // namespace repstat
