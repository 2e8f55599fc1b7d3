// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0
//
// Per-selector entanglement parameters E^(s,t,u,v) = |det Q|^2, their total,
// the dimension bound (N-1)/(2N), and maximally-entangled states.

#pragma once

#include <cstdint>
#include <utility>

#include "qsep/criteria.hpp"
#include "qsep/state.hpp"

namespace qsep {

struct EntanglementReport {
  std::vector<std::pair<QuadSelector, double>> params;  // lexicographic order
  double total = 0.0;
  double upper_bound = 0.0;     // (N-1)/(2N), N = min(n,m)
  double maxent_residual = 0.0;
};

// L_i = sum_J |C_iJ|^2 together with the row inner products
// sum_K conj(C_iK) C_jK for i < j.
struct RowGram {
  std::vector<double> row_norms;
  std::vector<std::pair<std::pair<int, int>, cx>> offdiag;
};

RowGram row_gram(const StateMatrix& c);

// |det Q^(sel)|^2.
double e_param(const StateMatrix& c, QuadSelector sel);

// Full report: every parameter, their sum, the bound, and the residual of the
// maximally-entangled condition (computed on the transpose when n > m so that
// the min(n,m) side governs).
EntanglementReport e_total(const StateMatrix& c);

// Sum of |det Q|^2 without building the per-selector table.
double e_total_value(const StateMatrix& c);

double e_upper_bound(int n, int m);

// Residual of sum_K conj(C_iK) C_jK = delta_ij / n, maximized over i <= j.
// Requires n <= m; callers with n > m should pass the transpose.
std::pair<bool, double> maxent_check(const StateMatrix& c, double tol = 1e-10);

// maxent_check residual with the transpose view applied automatically.
double maxent_residual_any(const StateMatrix& c);

// Seeded random maximally-entangled state: orthonormal rows (two-pass
// modified Gram-Schmidt) scaled by 1/sqrt(n); built for the transposed shape
// and transposed back when n > m.
StateMatrix generate_maxent(int n, int m, std::uint64_t seed);

// Both sides of the 2xm identity
//   (sum|C_i|^2 + sum|D_i|^2)^2 - 4 E^total
//     = [sum(|C_i|^2 - |D_i|^2)]^2 + 4 |sum conj(C_i) D_i|^2,
// valid for any (also unnormalized) 2xm input.
std::pair<double, double> verify_2xm_identity(const StateMatrix& c);

}  // namespace qsep
