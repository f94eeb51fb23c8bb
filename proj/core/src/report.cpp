#include "repstat/report.hpp"

#include <cmath>
#include <cstdio>

namespace repstat {

namespace {

std::string printf_string(const char* fmt, double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), fmt, x);
  return buffer;
}

}  // namespace

std::string format_p_value(double p) {
  if (std::isnan(p)) {
    return "NA";
  }
  if (p < 1e-4) {
    return "< 0.0001";
  }
  return printf_string("%.2g", p);
}

std::string format_effect(double x) {
  if (std::isnan(x)) {
    return "NA";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  return printf_string("%.2f", x);
}

std::string format_rate(double x) { return printf_string("%.6g", x); }

std::string format_full(double x) {
  if (std::isnan(x)) {
    return "NA";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  return printf_string("%.17g", x);
}

}  // namespace repstat
