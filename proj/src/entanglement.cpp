// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsep/entanglement.hpp"

#include <cmath>

#include "qsep/kernels.hpp"
#include "qsep/rng.hpp"

namespace qsep {

RowGram row_gram(const StateMatrix& c) {
  RowGram g;
  g.row_norms.assign(c.rows, 0.0);
  for (int i = 0; i < c.rows; ++i)
    for (int j = 0; j < c.cols; ++j) g.row_norms[i] += std::norm(c.at(i, j));
  for (int i = 0; i < c.rows; ++i)
    for (int j = i + 1; j < c.rows; ++j) {
      cx acc{0.0, 0.0};
      for (int k = 0; k < c.cols; ++k)
        acc += std::conj(c.at(i, k)) * c.at(j, k);
      g.offdiag.push_back({{i, j}, acc});
    }
  return g;
}

double e_param(const StateMatrix& c, QuadSelector sel) {
  return std::norm(submatrix_Q(c, sel).det());
}

double e_total_value(const StateMatrix& c) { return minor_sq_sum(c); }

double e_upper_bound(int n, int m) {
  if (n < 1 || m < 1) throw error("e_upper_bound: dimensions must be >= 1");
  const int N = n < m ? n : m;
  return static_cast<double>(N - 1) / (2.0 * N);
}

EntanglementReport e_total(const StateMatrix& c) {
  EntanglementReport r;
  r.params = minor_sq_table(c);
  double total = 0.0;
  for (const auto& [sel, val] : r.params) total += val;
  r.total = total;
  r.upper_bound = e_upper_bound(c.rows, c.cols);
  r.maxent_residual = maxent_residual_any(c);
  return r;
}

std::pair<bool, double> maxent_check(const StateMatrix& c, double tol) {
  if (c.rows > c.cols)
    throw error(
        "maxent_check: condition needs n <= m orthogonal rows; "
        "apply to the transpose (min(n,m) side governs)");
  const double target = 1.0 / c.rows;
  const RowGram g = row_gram(c);
  double residual = 0.0;
  for (double l : g.row_norms)
    residual = std::max(residual, std::abs(l - target));
  for (const auto& [ij, z] : g.offdiag)
    residual = std::max(residual, std::abs(z));
  return {residual <= tol, residual};
}

double maxent_residual_any(const StateMatrix& c) {
  if (c.rows <= c.cols) return maxent_check(c).second;
  return maxent_check(c.transposed()).second;
}

namespace {

// Two-pass modified Gram-Schmidt over the rows of a; rows are redrawn from
// the generator in the (measure-zero) event of near dependence.
void orthonormalize_rows(std::vector<cx>& a, int n, int m, GaussianRng& rng) {
  for (int i = 0; i < n; ++i) {
    cx* ri = &a[static_cast<std::size_t>(i) * m];
    for (int attempt = 0;; ++attempt) {
      for (int pass = 0; pass < 2; ++pass)
        for (int j = 0; j < i; ++j) {
          const cx* rj = &a[static_cast<std::size_t>(j) * m];
          cx proj{0.0, 0.0};
          for (int k = 0; k < m; ++k) proj += std::conj(rj[k]) * ri[k];
          for (int k = 0; k < m; ++k) ri[k] -= proj * rj[k];
        }
      double nrm2 = 0.0;
      for (int k = 0; k < m; ++k) nrm2 += std::norm(ri[k]);
      if (nrm2 > 1e-12) {
        const double inv = 1.0 / std::sqrt(nrm2);
        for (int k = 0; k < m; ++k) ri[k] *= inv;
        break;
      }
      if (attempt > 16) throw error("generate_maxent: orthonormalization failed");
      for (int k = 0; k < m; ++k) ri[k] = rng.complex_normal();
    }
  }
}

}  // namespace

StateMatrix generate_maxent(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 1) throw error("generate_maxent: dimensions must be >= 1");
  if (n > m) return generate_maxent(m, n, seed).transposed();
  GaussianRng rng(seed);
  std::vector<cx> a(static_cast<std::size_t>(n) * m);
  for (cx& z : a) z = rng.complex_normal();
  orthonormalize_rows(a, n, m, rng);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (cx& z : a) z *= scale;
  return StateMatrix(n, m, std::move(a));
}

std::pair<double, double> verify_2xm_identity(const StateMatrix& c) {
  if (c.rows != 2) throw error("verify_2xm_identity: requires n = 2");
  const RowGram g = row_gram(c);
  const double l0 = g.row_norms[0], l1 = g.row_norms[1];
  const cx cross = g.offdiag[0].second;
  const double lhs = (l0 + l1) * (l0 + l1) - 4.0 * e_total_value(c);
  const double rhs = (l0 - l1) * (l0 - l1) + 4.0 * std::norm(cross);
  return {lhs, rhs};
}

}  // namespace qsep
