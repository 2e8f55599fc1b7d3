// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0
//
// CHSH operator (Q+R)xS + (Q-R)xT from four Bloch directions, expectations on
// 2x2 states, the closed-form maximum 2 sqrt(<psi|psi>^2 + 4 |det C|^2), and a
// derivative-free multi-start optimizer that recovers it. Tensor ordering
// follows the composite index iJ = i*m + J shared with the ppt module.

#pragma once

#include <array>
#include <cstdint>

#include "qsep/criteria.hpp"
#include "qsep/state.hpp"

namespace qsep {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 1.0;
  double norm() const;
};

// Unit Bloch directions for the four observables Q, R (side A) and S, T (side B).
struct MeasurementSetting {
  Vec3 q, r, s, t;
};

struct ChshResult {
  MeasurementSetting settings;
  double achieved = 0.0;
  double closed_form_max = 0.0;
  double gap = 0.0;  // closed_form_max - achieved
  std::int64_t evaluations = 0;
};

using Mat4 = std::array<cx, 16>;  // 4x4 row-major

// v . sigma as a 2x2 Hermitian matrix.
std::array<cx, 4> pauli_dot(const Vec3& v);

// Throws if any direction deviates from unit norm by more than 1e-12.
Mat4 chsh_operator(const MeasurementSetting& ms);

// <psi|CHSH|psi> with psi the flattened 4-vector of C; the imaginary residue
// is asserted below 1e-12 and dropped.
double chsh_expectation(const StateMatrix& c, const MeasurementSetting& ms);

// Eq-form maximum for any 2x2 state, normalized or not.
double chsh_max_closed(const StateMatrix& c);

// Multi-start coordinate search over the 8 spherical angles: per coordinate a
// coarse scan plus golden-section refinement; phi is re-randomized whenever a
// theta lands within 1e-6 of a pole. budget = number of seeded restarts; the
// result is the max over restarts with lowest-index tie-break, deterministic
// per seed regardless of scheduling.
ChshResult chsh_optimize(const StateMatrix& c, int budget, std::uint64_t seed,
                         int passes = 500);

// chsh_optimize applied to the (unnormalized) 2x2 submatrix Q^(sel); the
// closed form uses the submatrix's own <psi|psi>.
ChshResult submatrix_chsh(const StateMatrix& c, QuadSelector sel,
                          int budget = 20, std::uint64_t seed = 0);

}  // namespace qsep
