#pragma once

#include <functional>

namespace repstat {

/// Root of f inside [lower, upper], which must bracket a sign change
/// (BracketingError otherwise).  Secant steps are taken while they behave,
/// with bisection as the safeguard, so convergence never escapes the
/// bracket; iteration stops once the bracket width is below x_tol or an
/// exact zero is hit.
double find_root(const std::function<double(double)>& f, double lower,
                 double upper, double x_tol = 1e-10);

/// Real roots of a x^2 + b x + c = 0 in ascending order.
struct QuadraticRoots {
  double lower;
  double upper;
};

/// Cancellation-free quadratic solver: the larger-magnitude root is computed
/// first via the sign-matched formula and the other through the product
/// relation c / (a * root).  a == 0 degrades to the linear root, reported
/// twice.  Throws NoRealRootError on a negative discriminant and
/// std::invalid_argument when a == b == 0.
QuadraticRoots solve_quadratic_stable(double a, double b, double c);

}  // namespace repstat
