// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsep/cubic.hpp"

#include <algorithm>
#include <cmath>

namespace qsep {

namespace {

double polish(double x, double b, double c, double d) {
  // single Newton step; guards against a flat derivative at multiple roots
  const double f = ((x + b) * x + c) * x + d;
  const double fp = (3.0 * x + 2.0 * b) * x + c;
  if (std::abs(fp) > 1e-30) {
    const double step = f / fp;
    if (std::abs(step) < 1.0) x -= step;
  }
  return x;
}

}  // namespace

std::array<double, 3> cubic_real_roots(double b, double c, double d) {
  // depressed form t^3 + p t + q with x = t - b/3
  const double shift = b / 3.0;
  const double p = c - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;

  std::array<double, 3> roots{};
  const double half_q = q / 2.0;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;

  if (p < 0.0 && disc <= 0.0) {
    // three real roots
    const double rho = std::sqrt(-third_p);
    double arg = -half_q / (rho * rho * rho);
    arg = std::clamp(arg, -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
      roots[k] = 2.0 * rho * std::cos(phi - 2.0 * M_PI * k / 3.0) - shift;
  } else if (std::abs(p) < 1e-100 && std::abs(q) < 1e-100) {
    roots = {-shift, -shift, -shift};
  } else {
    // Cardano; the conjugate pair collapses to its real part, which is the
    // right reading when rounding pushed a real spectrum across disc = 0
    const double s = std::sqrt(std::max(disc, 0.0));
    const double u = std::cbrt(-half_q + s);
    const double v = std::cbrt(-half_q - s);
    roots[0] = u + v - shift;
    roots[1] = -0.5 * (u + v) - shift;
    roots[2] = roots[1];
  }

  for (double& r : roots) r = polish(r, b, c, d);
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return roots;
}

}  // namespace qsep
