#pragma once

#include "repstat/sceptical.hpp"

namespace repstat {

/// Relative sample size c at which the minimum successful relative effect
/// size equals d_target: c = (K - 1) / (d_target^2 K (K - 1) - 1).  Targets
/// at or below the limit d_inf(z_o, level) are unreachable for any c and
/// throw InfeasibleDesignError carrying that limit; so does K <= 1.
double c_from_dmin_rs(double z_o, double d_target, const SuccessLevel& level);

/// Relative sample size at which the two-trials rule is achieved exactly by
/// relative effect size d_target: c = (z_alpha / (d_target * z_o))^2.
double c_from_d_two_trials(double z_o, double d_target, double alpha);

/// Relative sample size giving the requested conditional replication-success
/// power.  The asymptotic power as c -> inf (1, 0.5 or 0 depending on how
/// 1 - shrinkage compares with d_inf) is checked first; an unreachable
/// target throws InfeasibleDesignError carrying that limit, otherwise the
/// root is bracketed on log c in [log 1e-4, log 1e6].
double c_from_power_rs(double z_o, double power_target, double shrinkage,
                       const SuccessLevel& level);

/// Relative sample size giving the requested conditional two-trials power:
/// sqrt(c) = (z_alpha + Phi^-1(power_target)) / ((1 - shrinkage) * z_o).
/// Requires a significant original (p_o <= alpha), else the rule has power
/// zero for every c and InfeasibleDesignError is thrown.
double c_from_power_two_trials(double z_o, double power_target,
                               double shrinkage, double alpha);

}  // namespace repstat
