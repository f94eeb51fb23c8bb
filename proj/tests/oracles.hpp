#pragma once

// Slow, independent reference implementations used only by the test suites.
// Nothing here shares code with the library: the normal distribution comes
// from a Maclaurin series / continued fraction evaluated in long double, the
// quantile and the sceptical z^2 from plain bisection against those.  Values
// frozen in the tests were additionally cross-checked against an external
// double-precision implementation before being pinned.

#include <cmath>
#include <limits>
#include <stdexcept>

namespace oracle {

inline constexpr long double kSqrtPi = 1.772453850905516027298167483341L;
inline constexpr long double kSqrt2 = 1.414213562373095048801688724210L;

// Maclaurin series for erf, adequate for |x| <= 2 where the alternating
// terms stay small enough for long double headroom.
inline long double erf_series(long double x) {
  long double term = x;
  long double sum = x;
  const long double x2 = x * x;
  for (int n = 1; n < 500; ++n) {
    term *= -x2 / n;
    const long double contribution = term / (2 * n + 1);
    sum += contribution;
    if (std::fabs(contribution) < 1e-24L * std::fabs(sum)) {
      break;
    }
  }
  return 2.0L / kSqrtPi * sum;
}

// Continued fraction for erfc, modified Lentz algorithm; used for x >= 1.
inline long double erfc_continued_fraction(long double x) {
  const long double tiny = 1e-30L;
  long double f = tiny;
  long double c = f;
  long double d = 0.0L;
  for (int n = 1; n < 100000; ++n) {
    const long double a = n == 1 ? 1.0L : (n - 1) / 2.0L;
    d = x + a * d;
    if (d == 0.0L) d = tiny;
    c = x + a / c;
    if (c == 0.0L) c = tiny;
    d = 1.0L / d;
    const long double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0L) < 1e-22L) {
      break;
    }
  }
  return std::exp(-x * x) / kSqrtPi * f;
}

inline long double normal_cdf_ld(long double x) {
  const long double t = std::fabs(x) / kSqrt2;
  long double upper_tail;  // P(Z > |x|)
  if (t < 1.5L) {
    upper_tail = 0.5L * (1.0L - erf_series(t));
  } else {
    upper_tail = 0.5L * erfc_continued_fraction(t);
  }
  return x >= 0.0L ? 1.0L - upper_tail : upper_tail;
}

inline double normal_cdf(double x) {
  return static_cast<double>(normal_cdf_ld(x));
}

inline double normal_sf(double x) {
  return static_cast<double>(normal_cdf_ld(-static_cast<long double>(x)));
}

inline double normal_pdf(double x) {
  const long double inv_sqrt_2pi = 0.398942280401432677939946059934L;
  const long double xl = x;
  return static_cast<double>(inv_sqrt_2pi * std::exp(-0.5L * xl * xl));
}

// Quantile by bisection on the long double CDF.
inline double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("oracle quantile needs p in (0, 1)");
  }
  long double lo = -40.0L;
  long double hi = 40.0L;
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (normal_cdf_ld(mid) < static_cast<long double>(p)) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-17L * std::max(1.0L, std::fabs(lo))) {
      break;
    }
  }
  return static_cast<double>(0.5L * (lo + hi));
}

inline double upper_quantile(double p) { return -normal_quantile(p); }

// The defining equation of the sceptical z^2, solved by bisection on
// g(x) = (z_o^2/x - 1)(z_r^2/x - 1) - c over (0, min(z_o^2, z_r^2)).
inline double sceptical_z_squared(double z_o, double z_r, double c) {
  const long double zo2 = static_cast<long double>(z_o) * z_o;
  const long double zr2 = static_cast<long double>(z_r) * z_r;
  const long double cap = std::min(zo2, zr2);
  const auto g = [&](long double x) {
    return (zo2 / x - 1.0L) * (zr2 / x - 1.0L) - static_cast<long double>(c);
  };
  long double lo = cap * 1e-18L;  // g -> +inf as x -> 0+
  long double hi = cap * (1.0L - 1e-18L);  // g(cap) = -c < 0
  if (!(g(lo) > 0.0L) || !(g(hi) < 0.0L)) {
    throw std::runtime_error("oracle bisection bracket failed");
  }
  for (int i = 0; i < 300; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (g(mid) > 0.0L) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-18L * hi) {
      break;
    }
  }
  return static_cast<double>(0.5L * (lo + hi));
}

}  // namespace oracle
