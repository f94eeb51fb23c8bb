#include "repstat/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "repstat/errors.hpp"

namespace repstat {

double find_root(const std::function<double(double)>& f, double lower,
                 double upper, double x_tol) {
  if (!(std::isfinite(lower) && std::isfinite(upper)) || lower >= upper) {
    throw std::invalid_argument("root interval must be finite with lower < upper");
  }
  if (!(x_tol > 0.0)) {
    throw std::invalid_argument("x_tol must be positive");
  }

  double a = lower;
  double b = upper;
  double fa = f(a);
  double fb = f(b);
  if (!std::isfinite(fa) || !std::isfinite(fb)) {
    throw std::invalid_argument("f is not finite at an interval endpoint");
  }
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa < 0.0) == (fb < 0.0)) {
    throw BracketingError("no sign change over the given interval");
  }

  // Secant steps through the bracket endpoints, falling back to bisection
  // whenever the same endpoint survives twice in a row (the stall pattern of
  // regula falsi) or the secant point escapes the bracket.
  int last_moved = 0;
  int stall = 0;
  while (b - a > x_tol) {
    double x = (a * fb - b * fa) / (fb - fa);
    const bool take_secant = stall < 2 && std::isfinite(x) && x > a && x < b;
    if (!take_secant) {
      x = 0.5 * (a + b);
      if (!(x > a && x < b)) {
        return x;  // the bracket sits at rounding resolution already
      }
      stall = 0;
    }
    const double fx = f(x);
    if (fx == 0.0) return x;
    int moved;
    if ((fx < 0.0) == (fa < 0.0)) {
      a = x;
      fa = fx;
      moved = -1;
    } else {
      b = x;
      fb = fx;
      moved = 1;
    }
    stall = (take_secant && moved == last_moved) ? stall + 1 : 0;
    last_moved = moved;
  }
  return 0.5 * (a + b);
}

QuadraticRoots solve_quadratic_stable(double a, double b, double c) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c))) {
    throw std::invalid_argument("coefficients must be finite");
  }
  if (a == 0.0) {
    if (b == 0.0) {
      throw std::invalid_argument("a == 0 and b == 0: no root to solve for");
    }
    const double root = -c / b;
    return {root, root};
  }

  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    // b^2 and 4ac can agree to machine precision and still subtract to a
    // tiny negative; that is a double root, not a complex pair.
    const double scale =
        std::max(b * b, std::abs(4.0 * a * c));
    if (disc < -8.0 * std::numeric_limits<double>::epsilon() * scale) {
      throw NoRealRootError("negative discriminant");
    }
    disc = 0.0;
  }

  // Large-magnitude root first via the sign-matched numerator, the other
  // from the product of roots; neither direction cancels.
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double r1, r2;
  if (q == 0.0) {
    // Only possible when b == 0 and disc == 0, i.e. c == 0 too.
    r1 = r2 = 0.0;
  } else {
    r1 = q / a;
    r2 = c / q;
  }
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

}  // namespace repstat
