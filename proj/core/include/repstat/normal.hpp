#pragma once

namespace repstat {

/// Standard normal distribution function Phi(x).  Evaluated through the
/// complementary error function, which keeps the relative error near 1e-15
/// even deep in the lower tail.  Throws std::domain_error on non-finite x.
double normal_cdf(double x);

/// Upper tail 1 - Phi(x), evaluated without the cancellation that the
/// literal subtraction would suffer for large x.  normal_sf(x) equals
/// normal_cdf(-x) exactly.
double normal_sf(double x);

/// Standard normal density.
double normal_pdf(double x);

/// Inverse of normal_cdf on the open interval (0, 1): a rational
/// approximation good to ~1e-9 refined by one Newton step against
/// normal_cdf, giving |normal_cdf(normal_quantile(p)) - p| <= 1e-12.
/// Exactly antisymmetric about p = 0.5.  Throws std::domain_error for
/// p outside (0, 1) or non-finite p.
double normal_quantile(double p);

}  // namespace repstat
