#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <string>

#include "repstat/design.hpp"
#include "repstat/errors.hpp"
#include "repstat/normal.hpp"
#include "repstat/power.hpp"
#include "repstat/sceptical.hpp"

using namespace repstat;

namespace {

constexpr std::uint64_t kSeed = 0x243f6a8885a308d3ULL;

struct Violations {
  long count = 0;
  std::string first;

  void note(const std::string& detail) {
    if (count == 0) first = detail;
    ++count;
  }
};

std::string describe(double z_o, double z_r, double c) {
  return "z_o=" + std::to_string(z_o) + " z_r=" + std::to_string(z_r) +
         " c=" + std::to_string(c);
}

}  // namespace

TEST_CASE("all success routes agree on 100000 random pairs") {
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> z_dist(0.05, 5.0);
  std::uniform_real_distribution<double> log_c(-4.6051701859880914,
                                               4.6051701859880914);
  const SuccessLevel lv = golden_level(0.025);

  Violations bad;
  for (int i = 0; i < 100000; ++i) {
    const double z_o = z_dist(rng);
    const double z_r = z_dist(rng);
    const double c = std::exp(log_c(rng));

    const bool canonical = success_rs({z_o, z_r, c}, lv);
    const bool via_p = sceptical_p(z_o, z_r, c) <= lv.alpha_s;
    const bool via_z = z_r >= z_r_min(z_o, c, lv);
    const bool via_d =
        relative_effect_size(z_o, z_r, c) >= d_min(z_o, c, lv);
    const bool via_recalibrated =
        recalibrated_sceptical_p(z_o, z_r, c) <= lv.alpha;

    if (canonical != via_p || canonical != via_z || canonical != via_d ||
        canonical != via_recalibrated) {
      bad.note(describe(z_o, z_r, c));
    }
  }
  INFO("first violation: ", bad.first);
  CHECK(bad.count == 0);
}

TEST_CASE("the sceptical p-value exceeds both component p-values") {
  std::mt19937_64 rng(kSeed ^ 0x1);
  std::uniform_real_distribution<double> z_dist(0.05, 5.0);
  std::uniform_real_distribution<double> log_c(-4.6051701859880914,
                                               4.6051701859880914);
  Violations bad;
  for (int i = 0; i < 100000; ++i) {
    const double z_o = z_dist(rng);
    const double z_r = z_dist(rng);
    const double c = std::exp(log_c(rng));
    const double ps = sceptical_p(z_o, z_r, c);
    if (!(ps > normal_sf(z_o) && ps > normal_sf(z_r))) {
      bad.note(describe(z_o, z_r, c));
    }
    // recalibration helps but never reverses the sign of the evidence
    if (!(recalibrated_sceptical_p(z_o, z_r, c) < ps)) {
      bad.note("recalibration did not reduce " + describe(z_o, z_r, c));
    }
  }
  INFO("first violation: ", bad.first);
  CHECK(bad.count == 0);
}

TEST_CASE("sceptical_z_squared residual and admissibility") {
  std::mt19937_64 rng(kSeed ^ 0x2);
  std::uniform_real_distribution<double> z_dist(0.05, 5.0);
  std::uniform_real_distribution<double> log_c(-4.6051701859880914,
                                               4.6051701859880914);
  Violations bad;
  for (int i = 0; i < 100000; ++i) {
    const double z_o = z_dist(rng);
    const double z_r = z_dist(rng);
    const double c = std::exp(log_c(rng));
    const double x = sceptical_z_squared(z_o, z_r, c).z_squared;
    const double zo2 = z_o * z_o, zr2 = z_r * z_r;
    if (!(x > 0.0 && x < std::min(zo2, zr2))) {
      bad.note("root outside window at " + describe(z_o, z_r, c));
      continue;
    }
    const double residual = (zo2 / x - 1.0) * (zr2 / x - 1.0) - c;
    if (!(std::abs(residual) <= 1e-9 * std::max(1.0, c))) {
      bad.note("residual " + std::to_string(residual) + " at " +
               describe(z_o, z_r, c));
    }
  }
  INFO("first violation: ", bad.first);
  CHECK(bad.count == 0);
}

TEST_CASE("harmonic-mean identity at c = 1") {
  std::mt19937_64 rng(kSeed ^ 0x3);
  std::uniform_real_distribution<double> z_dist(0.05, 5.0);
  Violations bad;
  for (int i = 0; i < 10000; ++i) {
    const double z_o = z_dist(rng);
    const double z_r = z_dist(rng);
    const double zo2 = z_o * z_o, zr2 = z_r * z_r;
    const double x = sceptical_z_squared(z_o, z_r, 1.0).z_squared;
    if (std::abs(x - zo2 * zr2 / (zo2 + zr2)) > 1e-12) {
      bad.note(describe(z_o, z_r, 1.0));
    }
  }
  INFO("first violation: ", bad.first);
  CHECK(bad.count == 0);
}

TEST_CASE("z_r_min rises and d_min falls in c") {
  std::mt19937_64 rng(kSeed ^ 0x4);
  std::uniform_real_distribution<double> z_dist(1.6, 5.0);  // K > 1
  std::uniform_real_distribution<double> log_c(-4.6051701859880914,
                                               4.6051701859880914);
  const SuccessLevel lv = golden_level(0.025);
  Violations bad;
  for (int i = 0; i < 10000; ++i) {
    const double z_o = z_dist(rng);
    double c1 = std::exp(log_c(rng));
    double c2 = std::exp(log_c(rng));
    if (c1 == c2) continue;
    if (c1 > c2) std::swap(c1, c2);
    if (!(z_r_min(z_o, c1, lv) < z_r_min(z_o, c2, lv))) {
      bad.note("z_r_min not increasing at z_o=" + std::to_string(z_o));
    }
    if (!(d_min(z_o, c1, lv) > d_min(z_o, c2, lv))) {
      bad.note("d_min not decreasing at z_o=" + std::to_string(z_o));
    }
    if (!(d_min(z_o, c2, lv) > d_inf(z_o, lv))) {
      bad.note("d_min fell under d_inf at z_o=" + std::to_string(z_o));
    }
  }
  INFO("first violation: ", bad.first);
  CHECK(bad.count == 0);
}

TEST_CASE("assess is mirror invariant") {
  std::mt19937_64 rng(kSeed ^ 0x5);
  std::uniform_real_distribution<double> z_dist(0.05, 5.0);
  std::uniform_real_distribution<double> log_c(-4.6051701859880914,
                                               4.6051701859880914);
  const SuccessLevel lv = golden_level(0.025);
  Violations bad;
  for (int i = 0; i < 10000; ++i) {
    const double z_o = z_dist(rng);
    const double z_r = z_dist(rng);
    const double c = std::exp(log_c(rng));
    const AssessmentResult pos = assess({z_o, z_r, c}, lv);
    const AssessmentResult neg = assess({-z_o, -z_r, c}, lv);
    const bool same =
        pos.d == neg.d && pos.p_o == neg.p_o && pos.p_r == neg.p_r &&
        pos.p_s == neg.p_s && pos.p_s_tilde == neg.p_s_tilde &&
        pos.rs_success == neg.rs_success &&
        pos.ttr_success == neg.ttr_success && pos.z_r_min == neg.z_r_min;
    if (!same) bad.note(describe(z_o, z_r, c));
  }
  INFO("first violation: ", bad.first);
  CHECK(bad.count == 0);
}

TEST_CASE("two-trials success equals its relative-effect-size form") {
  std::mt19937_64 rng(kSeed ^ 0x6);
  std::uniform_real_distribution<double> z_dist(0.05, 5.0);
  std::uniform_real_distribution<double> log_c(-4.6051701859880914,
                                               4.6051701859880914);
  const double alpha = 0.025;
  const double z_alpha = -normal_quantile(alpha);
  Violations bad;
  for (int i = 0; i < 100000; ++i) {
    const double z_o = z_dist(rng);
    const double z_r = z_dist(rng);
    const double c = std::exp(log_c(rng));
    const bool rule = success_two_trials({z_o, z_r, c}, alpha);
    const bool d_form =
        z_o >= z_alpha &&
        relative_effect_size(z_o, z_r, c) >= z_alpha / (z_o * std::sqrt(c));
    if (rule != d_form) bad.note(describe(z_o, z_r, c));
  }
  INFO("first violation: ", bad.first);
  CHECK(bad.count == 0);
}

TEST_CASE("design inversions round trip") {
  std::mt19937_64 rng(kSeed ^ 0x7);
  const SuccessLevel lv = golden_level(0.025);
  std::uniform_real_distribution<double> z_dist(1.6, 5.0);
  std::uniform_real_distribution<double> stretch(0.02, 3.0);
  Violations bad;
  for (int i = 0; i < 10000; ++i) {
    const double z_o = z_dist(rng);
    const double target = d_inf(z_o, lv) * (1.0 + stretch(rng));
    const double c = c_from_dmin_rs(z_o, target, lv);
    if (std::abs(d_min(z_o, c, lv) - target) >
        1e-9 * std::max(1.0, target)) {
      bad.note("d_min round trip at z_o=" + std::to_string(z_o) +
               " target=" + std::to_string(target));
    }
    const double d2 = stretch(rng);
    const double c2 = c_from_d_two_trials(z_o, d2, 0.025);
    if (std::abs(-normal_quantile(0.025) / (z_o * std::sqrt(c2)) - d2) >
        1e-9) {
      bad.note("two-trials d round trip at z_o=" + std::to_string(z_o));
    }
  }
  INFO("first violation: ", bad.first);
  CHECK(bad.count == 0);
}

TEST_CASE("power inversions round trip") {
  std::mt19937_64 rng(kSeed ^ 0x8);
  const SuccessLevel lv = golden_level(0.025);
  std::uniform_real_distribution<double> p_dist(0.0005, 0.02);
  std::uniform_real_distribution<double> t_dist(0.2, 0.95);
  Violations bad;
  for (int i = 0; i < 1000; ++i) {
    const double z_o = -normal_quantile(p_dist(rng));
    const double target = t_dist(rng);
    const double c = c_from_power_rs(z_o, target, 0.0, lv);
    if (std::abs(power_rs_conditional({z_o, c, 0.0, lv}) - target) > 1e-7) {
      bad.note("rs power round trip at z_o=" + std::to_string(z_o) +
               " target=" + std::to_string(target));
    }
    const double c2 = c_from_power_two_trials(z_o, target, 0.0, 0.025);
    if (std::abs(power_2tr_conditional({z_o, c2, 0.0, lv}) - target) >
        1e-12) {
      bad.note("two-trials power round trip at z_o=" + std::to_string(z_o));
    }
  }
  INFO("first violation: ", bad.first);
  CHECK(bad.count == 0);
}

TEST_CASE("quantile round trip under random probabilities") {
  std::mt19937_64 rng(kSeed ^ 0x9);
  std::uniform_real_distribution<double> log_p(-27.631021115928547, 0.0);
  Violations bad;
  for (int i = 0; i < 100000; ++i) {
    const double p = 0.5 * std::exp(log_p(rng));  // (1e-12ish, 0.5]
    for (double probe : {p, 1.0 - p}) {
      if (std::abs(normal_cdf(normal_quantile(probe)) - probe) > 1e-12) {
        bad.note("p=" + std::to_string(probe));
      }
    }
  }
  INFO("first violation: ", bad.first);
  CHECK(bad.count == 0);
}

TEST_CASE("level calibrations are internally consistent") {
  Violations bad;
  for (double alpha : {0.001, 0.005, 0.01, 0.025, 0.05, 0.1}) {
    if (std::abs(alpha_prime(alpha, 1.0) - alpha) > 4e-16) {
      bad.note("alpha_prime identity at alpha=" + std::to_string(alpha));
    }
    const SuccessLevel golden = golden_level(alpha);
    const SuccessLevel via_res = level_from_limiting_res(alpha, 1.0);
    if (std::abs(golden.alpha_s - via_res.alpha_s) > 1e-15) {
      bad.note("golden vs limiting-res at alpha=" + std::to_string(alpha));
    }
    if (!(golden.alpha_s > alpha && golden.alpha_s < 0.5)) {
      bad.note("alpha_s out of range at alpha=" + std::to_string(alpha));
    }
  }
  INFO("first violation: ", bad.first);
  CHECK(bad.count == 0);
}
