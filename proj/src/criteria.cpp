// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsep/criteria.hpp"

#include <cmath>

#include "qsep/kernels.hpp"

namespace qsep {

Mat2 submatrix_S(const StateMatrix& c, int a, int b) {
  if (a < 0 || a > c.rows - 2 || b < 0 || b > c.cols - 2)
    throw error("submatrix_S: index out of range");
  return {c.at(a, b), c.at(a, b + 1), c.at(a + 1, b), c.at(a + 1, b + 1)};
}

Mat2 submatrix_Q(const StateMatrix& c, QuadSelector sel) {
  if (sel.s >= sel.t || sel.u >= sel.v)
    throw error("submatrix_Q: selector requires s < t and u < v");
  if (sel.s < 0 || sel.t >= c.rows || sel.u < 0 || sel.v >= c.cols)
    throw error("submatrix_Q: index out of range");
  return {c.at(sel.s, sel.u), c.at(sel.s, sel.v), c.at(sel.t, sel.u),
          c.at(sel.t, sel.v)};
}

double s_sum(const StateMatrix& c) {
  double acc = 0.0;
  for (int a = 0; a + 1 < c.rows; ++a)
    for (int b = 0; b + 1 < c.cols; ++b)
      acc += std::abs(submatrix_S(c, a, b).det());
  return acc;
}

double chi(const StateMatrix& c) {
  const int n = c.rows, m = c.cols;
  double acc = 0.0;
  // alpha = 1, beta >= 2
  for (int a = 0; a + 1 < n; ++a)
    for (int b = 0; b < m; ++b)
      for (int be = 2; b + be < m; ++be)
        acc += std::abs(Mat2{c.at(a, b), c.at(a, b + be), c.at(a + 1, b),
                             c.at(a + 1, b + be)}
                            .det());
  // beta = 1, alpha >= 2
  for (int b = 0; b + 1 < m; ++b)
    for (int a = 0; a < n; ++a)
      for (int al = 2; a + al < n; ++al)
        acc += std::abs(Mat2{c.at(a, b), c.at(a, b + 1), c.at(a + al, b),
                             c.at(a + al, b + 1)}
                            .det());
  return acc;
}

double q_sum(const StateMatrix& c) { return minor_abs_sum(c); }

ReducedCriterion reduced_criterion(const StateMatrix& c, double tol) {
  ReducedMatrix r = reduce(c, tol);
  double value = s_sum(r.matrix) + zero_flag(r.matrix, tol);
  return {value, value <= tol};
}

SeparabilityVerdict is_separable(const StateMatrix& c, double tol) {
  SeparabilityVerdict v;
  v.q_sum = q_sum(c);
  v.tol = tol;
  v.separable = v.q_sum <= tol;
  if (!v.separable) v.witness = best_minor(c).sel;
  return v;
}

Factorization factorize(const StateMatrix& c, double tol) {
  SeparabilityVerdict v = is_separable(c, tol);
  if (!v.separable) throw not_separable_error(*v.witness);
  ReducedMatrix r = reduce(c, tol);

  Factorization f;
  f.a.assign(c.rows, cx{0.0, 0.0});
  f.b.assign(c.cols, cx{0.0, 0.0});
  const cx pivot = r.matrix.at(0, 0);
  for (std::size_t i = 0; i < r.kept_rows.size(); ++i)
    f.a[r.kept_rows[i]] = r.matrix.at(static_cast<int>(i), 0);
  for (std::size_t j = 0; j < r.kept_cols.size(); ++j)
    f.b[r.kept_cols[j]] = r.matrix.at(0, static_cast<int>(j)) / pivot;

  double residual = 0.0;
  for (int i = 0; i < c.rows; ++i)
    for (int j = 0; j < c.cols; ++j)
      residual = std::max(residual, std::abs(c.at(i, j) - f.a[i] * f.b[j]));
  f.residual = residual;
  return f;
}

}  // namespace qsep
