#pragma once

#include <algorithm>
#include <cmath>

namespace altfix {

// Uniform comparison rule: an inequality a <= b passes iff
//   a <= b + kEpsAbs + kEpsRel * max(|a|, |b|).
// Every validator and certificate in the toolkit uses this single rule so
// that margins stay comparable across reports.
inline constexpr double kEpsAbs = 1e-12;
inline constexpr double kEpsRel = 1e-9;

inline double tol_slack(double a, double b) {
    return kEpsAbs + kEpsRel * std::max(std::fabs(a), std::fabs(b));
}

inline bool approx_leq(double a, double b) { return a <= b + tol_slack(a, b); }

inline bool approx_eq(double a, double b) { return std::fabs(a - b) <= tol_slack(a, b); }

inline bool approx_zero(double a) { return std::fabs(a) <= kEpsAbs; }

}  // namespace altfix
