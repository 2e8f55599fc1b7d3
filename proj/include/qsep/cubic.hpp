// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

namespace qsep {

// Real roots of x^3 + b x^2 + c x + d for cubics whose roots are known real
// (eigenvalue-derived). Trigonometric branch when the discriminant indicates
// three real roots, Cardano otherwise, then one Newton polish per root.
// Returned in descending order.
std::array<double, 3> cubic_real_roots(double b, double c, double d);

}  // namespace qsep
