#pragma once

#include <cmath>
#include <cstdlib>

namespace lipext {

// Default comparison tolerance for certified inequalities and metric checks.
inline constexpr double kDefaultTol = 1e-9;

// Default cap on materialized point counts.  LIPEXT_MAX_POINTS overrides it.
inline constexpr int kDefaultMaxPoints = 512;

inline int max_points_cap() {
  if (const char* env = std::getenv("LIPEXT_MAX_POINTS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return kDefaultMaxPoints;
}

inline bool leq_tol(double a, double b, double tol = kDefaultTol) { return a <= b + tol; }
inline bool geq_tol(double a, double b, double tol = kDefaultTol) { return a + tol >= b; }
inline bool near(double a, double b, double tol = kDefaultTol) { return std::fabs(a - b) <= tol; }

}  // namespace lipext
