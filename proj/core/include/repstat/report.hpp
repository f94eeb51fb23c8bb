#pragma once

#include <string>

namespace repstat {

/// P-value rendering for reports: two significant figures with trailing
/// zeros trimmed ("0.028", "0.0003"), and "< 0.0001" below 1e-4.
std::string format_p_value(double p);

/// Effect-size / relative-sample-size rendering: two decimals.
std::string format_effect(double x);

/// Rates and powers: six significant figures (full precision belongs in the
/// JSON output, not the text report).
std::string format_rate(double x);

/// Full-precision rendering that round-trips a double exactly.
std::string format_full(double x);

}  // namespace repstat
