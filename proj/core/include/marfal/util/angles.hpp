#pragma once

#include <cmath>
#include <numbers>

namespace marfal::util {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Wraps an angle to [-pi, pi).
inline double wrap_pi(double a) {
  double w = std::remainder(a, two_pi);
  return w < pi ? w : w - two_pi;
}

inline double deg2rad(double deg) { return deg * pi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / pi; }

// sgn per the robustness semantics: 1 for positive, -1 otherwise (including 0).
inline double strict_sgn(double a) { return a > 0.0 ? 1.0 : -1.0; }

}  // namespace marfal::util
