#include "repstat/rates.hpp"

#include <cmath>
#include <stdexcept>

#include "repstat/normal.hpp"
#include "repstat/quadrature.hpp"

namespace repstat {

namespace {

// Upper integration limit: max(z_alpha_s, mu) + 8.5 leaves less than 1e-17
// of normal mass outside under either hypothesis.
constexpr double kTailWidth = 8.5;

void require_variance_ratio(double c) {
  if (!std::isfinite(c) || !(c > 0.0)) {
    throw std::domain_error("variance ratio c must be positive and finite");
  }
}

double success_probability_given_original(double z_o, double c,
                                          const SuccessLevel& level,
                                          double replication_mean) {
  const double threshold = z_r_min(z_o, c, level);
  if (!std::isfinite(threshold)) {
    return 0.0;
  }
  return normal_sf(threshold - replication_mean);
}

}  // namespace

RateResult t1e_closed_c1(const SuccessLevel& level) {
  return {0.5 * normal_sf(2.0 * level.z_alpha_s), 0.0, 0};
}

RateResult t1e_quadrature(double c, const SuccessLevel& level) {
  require_variance_ratio(c);
  const double lower = level.z_alpha_s;  // success is impossible below
  const double upper = level.z_alpha_s + kTailWidth;
  const auto q = integrate(
      [&](double z_o) {
        return success_probability_given_original(z_o, c, level, 0.0) *
               normal_pdf(z_o);
      },
      lower, upper);
  return {q.value, q.abs_error_estimate, q.evaluations};
}

double t1e_two_trials(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw std::domain_error("alpha must lie in (0, 0.5)");
  }
  return alpha * alpha;
}

RateResult project_power_rs(const ProjectPowerSpec& spec) {
  require_variance_ratio(spec.c);
  if (!(spec.alpha > 0.0 && spec.alpha < 0.5)) {
    throw std::domain_error("alpha must lie in (0, 0.5)");
  }
  if (!(spec.beta > 0.0 && spec.beta < 1.0)) {
    throw std::domain_error("beta must lie in (0, 1)");
  }

  const double z_alpha = -normal_quantile(spec.alpha);
  const double z_beta = -normal_quantile(spec.beta);
  const double mu = z_alpha + z_beta;  // the effect both studies are powered for
  const double replication_mean = std::sqrt(spec.c) * mu;
  // Restricting to significant originals raises the lower limit to z_alpha;
  // the result is then the joint probability of significance and success.
  const double lower = spec.restricted
                           ? std::max(spec.level.z_alpha_s, z_alpha)
                           : spec.level.z_alpha_s;
  const double upper = std::max(spec.level.z_alpha_s, mu) + kTailWidth;
  const auto q = integrate(
      [&](double z_o) {
        return success_probability_given_original(z_o, spec.c, spec.level,
                                                  replication_mean) *
               normal_pdf(z_o - mu);
      },
      lower, upper);
  return {q.value, q.abs_error_estimate, q.evaluations};
}

double project_power_two_trials(double alpha, double beta, double c) {
  require_variance_ratio(c);
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw std::domain_error("alpha must lie in (0, 0.5)");
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::domain_error("beta must lie in (0, 1)");
  }
  const double z_alpha = -normal_quantile(alpha);
  const double mu = z_alpha - normal_quantile(beta);
  return (1.0 - beta) * normal_cdf(std::sqrt(c) * mu - z_alpha);
}

}  // namespace repstat
