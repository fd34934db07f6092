#pragma once

#include <cmath>
#include <numbers>

namespace halfshift {

// sin(pi x) with x first reduced into [-1/2, 1/2]. The reductions are exact
// in binary floating point, so integers give exactly 0 and large arguments
// keep full accuracy.
inline double sin_pi(double x) {
  double r = x - 2.0 * std::nearbyint(0.5 * x);  // [-1, 1]
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(std::numbers::pi * r);
}

// cos(pi x) with the same exact reduction.
inline double cos_pi(double x) {
  double r = x - 2.0 * std::nearbyint(0.5 * x);  // [-1, 1]
  double sign = 1.0;
  if (r > 0.5) {
    r = 1.0 - r;
    sign = -1.0;
  } else if (r < -0.5) {
    r = -1.0 - r;
    sign = -1.0;
  }
  return sign * std::cos(std::numbers::pi * r);
}

// Normalized sinc: sin(pi x) / (pi x), sinc(0) = 1.
inline double sinc(double x) {
  if (x == 0.0) {
    return 1.0;
  }
  return sin_pi(x) / (std::numbers::pi * x);
}

}  // namespace halfshift
