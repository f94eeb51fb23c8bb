#include "repstat/power.hpp"

#include <cmath>
#include <stdexcept>

#include "repstat/normal.hpp"

namespace repstat {

namespace {

void validate(const PowerSpec& spec) {
  if (!std::isfinite(spec.z_o)) {
    throw std::domain_error("z_o must be finite");
  }
  if (!std::isfinite(spec.c) || !(spec.c > 0.0)) {
    throw std::domain_error("variance ratio c must be positive and finite");
  }
  if (!(spec.shrinkage >= 0.0 && spec.shrinkage < 1.0)) {
    throw std::domain_error("shrinkage must lie in [0, 1)");
  }
}

void reject_shrinkage_for_predictive(const PowerSpec& spec) {
  if (spec.shrinkage != 0.0) {
    throw std::invalid_argument(
        "shrinkage applies to the conditional view only; the predictive view "
        "already propagates the original estimate's uncertainty");
  }
}

}  // namespace

PowerSpec power_spec_from_p(double p_o, double c, double shrinkage,
                            const SuccessLevel& level) {
  if (!(p_o > 0.0 && p_o < 1.0)) {
    throw std::domain_error("p_o must lie in (0, 1)");
  }
  PowerSpec spec{-normal_quantile(p_o), c, shrinkage, level};
  validate(spec);
  return spec;
}

double power_rs_conditional(const PowerSpec& spec) {
  validate(spec);
  const double dm = d_min(spec.z_o, spec.c, spec.level);
  if (!std::isfinite(dm)) {
    return 0.0;
  }
  return normal_cdf(std::sqrt(spec.c) * spec.z_o *
                    (1.0 - spec.shrinkage - dm));
}

double power_rs_predictive(const PowerSpec& spec) {
  validate(spec);
  reject_shrinkage_for_predictive(spec);
  const double dm = d_min(spec.z_o, spec.c, spec.level);
  if (!std::isfinite(dm)) {
    return 0.0;
  }
  return normal_cdf(spec.z_o * (1.0 - dm) / std::sqrt(1.0 + 1.0 / spec.c));
}

double power_2tr_conditional(const PowerSpec& spec) {
  validate(spec);
  if (spec.z_o < spec.level.z_alpha) {
    return 0.0;  // the original already failed the rule
  }
  return normal_cdf(std::sqrt(spec.c) * (1.0 - spec.shrinkage) * spec.z_o -
                    spec.level.z_alpha);
}

double power_2tr_predictive(const PowerSpec& spec) {
  validate(spec);
  reject_shrinkage_for_predictive(spec);
  if (spec.z_o < spec.level.z_alpha) {
    return 0.0;
  }
  return normal_cdf((std::sqrt(spec.c) * spec.z_o - spec.level.z_alpha) /
                    std::sqrt(1.0 + spec.c));
}

}  // namespace repstat
