// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0
//
// 2x2 submatrix families of the coefficient matrix and the separability
// criteria built from their determinants. Three families appear:
//   S(a,b)        adjacent rows and columns,
//   G(a,b,al,be)  one side adjacent, the other stretched,
//   Q(s,t,u,v)    arbitrary row pair and column pair.
// A state is separable exactly when every |det Q| vanishes; the reduced
// criterion sum |det S(R)| + delta(R) over the reduced matrix R is the
// equivalent two-term form.

#pragma once

#include <optional>

#include "qsep/state.hpp"

namespace qsep {

// Row pair (s,t) and column pair (u,v) selecting a qubit-qubit subsystem.
// 0-based internally; reports print 1-based.
struct QuadSelector {
  int s = 0, t = 1, u = 0, v = 1;  // s < t, u < v

  friend bool operator==(const QuadSelector&, const QuadSelector&) = default;
  friend auto operator<=>(const QuadSelector&, const QuadSelector&) = default;
};

struct Mat2 {
  cx m00, m01, m10, m11;
  cx det() const { return m00 * m11 - m01 * m10; }
};

struct SeparabilityVerdict {
  bool separable = false;
  double q_sum = 0.0;
  std::optional<QuadSelector> witness;  // present iff not separable
  double tol = kZeroTol;
};

// C_iJ = a_i * b_J up to the reported residual; a_i (b_J) is exactly zero for
// rows (columns) the reduction eliminated.
struct Factorization {
  std::vector<cx> a;
  std::vector<cx> b;
  double residual = 0.0;
};

struct not_separable_error : error {
  QuadSelector witness;
  explicit not_separable_error(QuadSelector w)
      : error("factorize: state is entangled"), witness(w) {}
};

struct ReducedCriterion {
  double value = 0.0;
  bool separable = false;
};

// [[C_{a,b}, C_{a,b+1}], [C_{a+1,b}, C_{a+1,b+1}]]; a in [0, n-2], b in [0, m-2].
Mat2 submatrix_S(const StateMatrix& c, int a, int b);

// [[C_{s,u}, C_{s,v}], [C_{t,u}, C_{t,v}]].
Mat2 submatrix_Q(const StateMatrix& c, QuadSelector sel);

// Sum of |det S| over all (n-1)(m-1) adjacent submatrices.
double s_sum(const StateMatrix& c);

// Sum of |det G| over the two stretched families (alpha = 1 with beta >= 2,
// and beta = 1 with alpha >= 2); 0 when both are empty (n <= 2 and m <= 2).
double chi(const StateMatrix& c);

// Sum of |det Q| over all C(n,2)*C(m,2) selectors; 0 when n = 1 or m = 1.
double q_sum(const StateMatrix& c);

// sum |det S(R)| + delta(R) on the reduced matrix; separable iff <= tol.
ReducedCriterion reduced_criterion(const StateMatrix& c, double tol = kZeroTol);

// Final criterion: separable iff q_sum <= tol. When entangled the witness is
// the selector of largest |det Q| (lexicographic tie-break).
SeparabilityVerdict is_separable(const StateMatrix& c, double tol = kZeroTol);

// Recovers a, b with C_iJ ~ a_i b_J from the reduced matrix: a is its first
// column, b its first row divided by R_00 (so b at the first kept column is
// exactly 1). Throws not_separable_error on entangled input.
Factorization factorize(const StateMatrix& c, double tol = kZeroTol);

}  // namespace qsep
