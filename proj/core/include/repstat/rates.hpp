#pragma once

#include "repstat/sceptical.hpp"

namespace repstat {

/// A rate obtained by integrating over original study outcomes, with the
/// quadrature diagnostics attached.  Closed-form rates report a zero error
/// estimate and zero evaluations.
struct RateResult {
  double value;
  double abs_error_estimate;
  long evaluations;
};

/// Overall type-I error of the sceptical p-value at c = 1, closed form:
/// (1 - Phi(2 * z_alpha_s)) / 2.
RateResult t1e_closed_c1(const SuccessLevel& level);

/// Overall type-I error at arbitrary relative sample size c, integrating
/// P(z_r >= z_r_min | z_o) over the null distribution of z_o from z_alpha_s
/// up (success is impossible below) to z_alpha_s + 8.5.
RateResult t1e_quadrature(double c, const SuccessLevel& level);

/// Overall type-I error of the two-trials rule: alpha^2, independent of c.
double t1e_two_trials(double alpha);

/// Inputs for project-level power: both studies are powered at 1 - beta for
/// the same true effect, i.e. mu = z_alpha + z_beta on the z scale, and the
/// replication runs at relative sample size c.  restricted additionally
/// conditions success on a significant original (z_o >= z_alpha), which
/// makes the comparison with the two-trials rule like for like.
struct ProjectPowerSpec {
  double alpha;
  double beta;
  double c;
  SuccessLevel level;
  bool restricted = false;
};

/// Probability that a project yields replication success, integrating
/// P(z_r >= z_r_min | z_o) against the alternative N(mu, 1) distribution of
/// z_o.  The restricted variant is the joint probability of a significant
/// original and success.
RateResult project_power_rs(const ProjectPowerSpec& spec);

/// Project power of the two-trials rule: (1 - beta) * Phi(sqrt(c) * mu -
/// z_alpha).
double project_power_two_trials(double alpha, double beta, double c);

}  // namespace repstat
