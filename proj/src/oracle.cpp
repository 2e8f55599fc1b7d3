// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsep/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "qsep/chsh.hpp"

namespace qsep::oracle {

namespace {

// One-sided Jacobi on the columns of a tall matrix: rotate column pairs until
// mutually orthogonal; singular values are the final column norms.
std::vector<double> singular_values(std::vector<cx> w, int h, int nc) {
  auto dot = [&](int p, int q) {
    cx acc{0.0, 0.0};
    for (int i = 0; i < h; ++i)
      acc += std::conj(w[static_cast<std::size_t>(i) * nc + p]) *
             w[static_cast<std::size_t>(i) * nc + q];
    return acc;
  };
  auto nrm2 = [&](int p) {
    double acc = 0.0;
    for (int i = 0; i < h; ++i)
      acc += std::norm(w[static_cast<std::size_t>(i) * nc + p]);
    return acc;
  };

  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < nc - 1; ++p)
      for (int q = p + 1; q < nc; ++q) {
        const double a = nrm2(p), b = nrm2(q);
        const cx g = dot(p, q);
        const double gm = std::abs(g);
        if (gm <= 1e-15 * std::sqrt(a * b) || gm == 0.0) continue;
        rotated = true;
        const cx f = g / gm;
        const double tau = (b - a) / (2.0 * gm);
        double t;
        if (tau >= 0.0)
          t = -1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        if (tau == 0.0) t = 1.0;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cx s = t * c * std::conj(f);
        const cx s_conj = std::conj(s);
        for (int i = 0; i < h; ++i) {
          cx& wp = w[static_cast<std::size_t>(i) * nc + p];
          cx& wq = w[static_cast<std::size_t>(i) * nc + q];
          const cx up = wp, uq = wq;
          wp = c * up + s * uq;
          wq = -s_conj * up + c * uq;
        }
      }
    if (!rotated) break;
  }

  std::vector<double> sv(nc);
  for (int p = 0; p < nc; ++p) sv[p] = std::sqrt(nrm2(p));
  std::sort(sv.begin(), sv.end(), std::greater<double>());
  return sv;
}

}  // namespace

SingularProfile schmidt_rank(const StateMatrix& c, double tol) {
  // work on the conjugate transpose when wide, so columns are the short side
  std::vector<cx> w;
  int h, nc;
  if (c.rows >= c.cols) {
    w = c.data;
    h = c.rows;
    nc = c.cols;
  } else {
    h = c.cols;
    nc = c.rows;
    w.resize(c.data.size());
    for (int i = 0; i < c.rows; ++i)
      for (int j = 0; j < c.cols; ++j)
        w[static_cast<std::size_t>(j) * nc + i] = std::conj(c.at(i, j));
  }
  SingularProfile out;
  out.values = singular_values(std::move(w), h, nc);
  if (!out.values.empty() && out.values[0] > 0.0) {
    for (double v : out.values)
      if (v > tol * out.values[0]) ++out.rank;
  }
  return out;
}

double e_total_gram(const StateMatrix& c) {
  const int n = c.rows;
  std::vector<cx> g(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cx acc{0.0, 0.0};
      for (int k = 0; k < c.cols; ++k)
        acc += c.at(i, k) * std::conj(c.at(j, k));
      g[static_cast<std::size_t>(i) * n + j] = acc;
    }
  double tr = 0.0, tr2 = 0.0;
  for (int i = 0; i < n; ++i) tr += g[static_cast<std::size_t>(i) * n + i].real();
  for (const cx& z : g) tr2 += std::norm(z);
  return (tr * tr - tr2) / 2.0;
}

namespace {

// F[a][b] = <psi| (d_a . sigma) x (d_b . sigma) |psi> over the direction grid;
// the CHSH value at any grid tuple is F[q][s] + F[q][t] + F[r][s] - F[r][t],
// so the max over s and t separates for each (q, r).
struct GridTable {
  int g = 0;
  std::vector<double> f;
};

GridTable build_table(const StateMatrix& c, int resolution) {
  GridTable tab;
  tab.g = resolution * resolution;
  std::vector<std::array<cx, 4>> paulis(tab.g);
  int a = 0;
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j, ++a) {
      const double th = M_PI * (i + 0.5) / resolution;
      const double ph = 2.0 * M_PI * j / resolution;
      paulis[a] = pauli_dot(
          {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
           std::cos(th)});
    }
  tab.f.resize(static_cast<std::size_t>(tab.g) * tab.g);
  for (int p = 0; p < tab.g; ++p)
    for (int q = 0; q < tab.g; ++q) {
      cx acc{0.0, 0.0};
      for (int i = 0; i < 2; ++i)
        for (int J = 0; J < 2; ++J)
          for (int k = 0; k < 2; ++k)
            for (int L = 0; L < 2; ++L)
              acc += std::conj(c.data[static_cast<std::size_t>(2 * i) + J]) *
                     paulis[p][static_cast<std::size_t>(2 * i) + k] *
                     paulis[q][static_cast<std::size_t>(2 * J) + L] *
                     c.data[static_cast<std::size_t>(2 * k) + L];
      tab.f[static_cast<std::size_t>(p) * tab.g + q] = acc.real();
    }
  return tab;
}

double best_for_q(const GridTable& tab, int q) {
  const int g = tab.g;
  const double* fq = &tab.f[static_cast<std::size_t>(q) * g];
  double best = -1e300;
  for (int r = 0; r < g; ++r) {
    const double* fr = &tab.f[static_cast<std::size_t>(r) * g];
    double t1 = -1e300, t2 = -1e300;
    for (int s = 0; s < g; ++s) {
      t1 = std::max(t1, fq[s] + fr[s]);
      t2 = std::max(t2, fq[s] - fr[s]);
    }
    best = std::max(best, t1 + t2);
  }
  return best;
}

void check_grid_args(const StateMatrix& c, int resolution) {
  if (c.rows != 2 || c.cols != 2)
    throw error("grid_chsh: requires a 2x2 state");
  if (resolution < 1 || resolution > 12)
    throw error("grid_chsh: resolution must be in [1, 12]");
}

}  // namespace

double grid_chsh(const StateMatrix& c, int resolution) {
  check_grid_args(c, resolution);
  const GridTable tab = build_table(c, resolution);
  std::vector<double> partial(tab.g);
#pragma omp parallel for schedule(static)
  for (int q = 0; q < tab.g; ++q) partial[q] = best_for_q(tab, q);
  double best = partial[0];
  for (double v : partial) best = std::max(best, v);
  return best;
}

namespace reference {

double grid_chsh(const StateMatrix& c, int resolution) {
  check_grid_args(c, resolution);
  const GridTable tab = build_table(c, resolution);
  double best = -1e300;
  for (int q = 0; q < tab.g; ++q) best = std::max(best, best_for_q(tab, q));
  return best;
}

}  // namespace reference

}  // namespace qsep::oracle
