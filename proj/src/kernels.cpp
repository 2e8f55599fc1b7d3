// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsep/kernels.hpp"

#include <cmath>

namespace qsep {

namespace {

std::vector<std::pair<int, int>> row_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) pairs.emplace_back(s, t);
  return pairs;
}

// Sum of f(|det Q|) over all column pairs for one row pair, in (u,v) order.
template <typename F>
double pair_sum(const StateMatrix& c, int s, int t, F f) {
  const int m = c.cols;
  const cx* rs = &c.data[static_cast<std::size_t>(s) * m];
  const cx* rt = &c.data[static_cast<std::size_t>(t) * m];
  double acc = 0.0;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      acc += f(std::abs(rs[u] * rt[v] - rs[v] * rt[u]));
  return acc;
}

BestMinor pair_best(const StateMatrix& c, int s, int t) {
  const int m = c.cols;
  const cx* rs = &c.data[static_cast<std::size_t>(s) * m];
  const cx* rt = &c.data[static_cast<std::size_t>(t) * m];
  BestMinor best{-1.0, {s, t, 0, 1}};
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) {
      double d = std::abs(rs[u] * rt[v] - rs[v] * rt[u]);
      if (d > best.abs_det) best = {d, {s, t, u, v}};
    }
  return best;
}

}  // namespace

double minor_abs_sum(const StateMatrix& c) {
  if (c.rows < 2 || c.cols < 2) return 0.0;
  const auto pairs = row_pairs(c.rows);
  const int np = static_cast<int>(pairs.size());
  std::vector<double> partial(np);
#pragma omp parallel for schedule(static)
  for (int p = 0; p < np; ++p)
    partial[p] = pair_sum(c, pairs[p].first, pairs[p].second,
                          [](double d) { return d; });
  double total = 0.0;
  for (double x : partial) total += x;
  return total;
}

double minor_sq_sum(const StateMatrix& c) {
  if (c.rows < 2 || c.cols < 2) return 0.0;
  const auto pairs = row_pairs(c.rows);
  const int np = static_cast<int>(pairs.size());
  std::vector<double> partial(np);
#pragma omp parallel for schedule(static)
  for (int p = 0; p < np; ++p)
    partial[p] = pair_sum(c, pairs[p].first, pairs[p].second,
                          [](double d) { return d * d; });
  double total = 0.0;
  for (double x : partial) total += x;
  return total;
}

BestMinor best_minor(const StateMatrix& c) {
  if (c.rows < 2 || c.cols < 2) return {0.0, {0, 1, 0, 1}};
  const auto pairs = row_pairs(c.rows);
  const int np = static_cast<int>(pairs.size());
  std::vector<BestMinor> partial(np);
#pragma omp parallel for schedule(static)
  for (int p = 0; p < np; ++p)
    partial[p] = pair_best(c, pairs[p].first, pairs[p].second);
  BestMinor best = partial[0];
  for (int p = 1; p < np; ++p)
    if (partial[p].abs_det > best.abs_det) best = partial[p];
  return best;
}

std::vector<std::pair<QuadSelector, double>> minor_sq_table(
    const StateMatrix& c) {
  if (c.rows < 2 || c.cols < 2) return {};
  const auto pairs = row_pairs(c.rows);
  const int np = static_cast<int>(pairs.size());
  const int per_pair = c.cols * (c.cols - 1) / 2;
  std::vector<std::pair<QuadSelector, double>> table(
      static_cast<std::size_t>(np) * per_pair);
#pragma omp parallel for schedule(static)
  for (int p = 0; p < np; ++p) {
    const auto [s, t] = pairs[p];
    const cx* rs = &c.data[static_cast<std::size_t>(s) * c.cols];
    const cx* rt = &c.data[static_cast<std::size_t>(t) * c.cols];
    std::size_t k = static_cast<std::size_t>(p) * per_pair;
    for (int u = 0; u < c.cols; ++u)
      for (int v = u + 1; v < c.cols; ++v, ++k) {
        double d = std::abs(rs[u] * rt[v] - rs[v] * rt[u]);
        table[k] = {{s, t, u, v}, d * d};
      }
  }
  return table;
}

namespace reference {

double minor_abs_sum(const StateMatrix& c) {
  double acc = 0.0;
  for (int s = 0; s < c.rows; ++s)
    for (int t = s + 1; t < c.rows; ++t)
      for (int u = 0; u < c.cols; ++u)
        for (int v = u + 1; v < c.cols; ++v)
          acc += std::abs(c.at(s, u) * c.at(t, v) - c.at(s, v) * c.at(t, u));
  return acc;
}

double minor_sq_sum(const StateMatrix& c) {
  double acc = 0.0;
  for (int s = 0; s < c.rows; ++s)
    for (int t = s + 1; t < c.rows; ++t)
      for (int u = 0; u < c.cols; ++u)
        for (int v = u + 1; v < c.cols; ++v) {
          double d =
              std::abs(c.at(s, u) * c.at(t, v) - c.at(s, v) * c.at(t, u));
          acc += d * d;
        }
  return acc;
}

BestMinor best_minor(const StateMatrix& c) {
  BestMinor best{-1.0, {0, 1, 0, 1}};
  for (int s = 0; s < c.rows; ++s)
    for (int t = s + 1; t < c.rows; ++t)
      for (int u = 0; u < c.cols; ++u)
        for (int v = u + 1; v < c.cols; ++v) {
          double d =
              std::abs(c.at(s, u) * c.at(t, v) - c.at(s, v) * c.at(t, u));
          if (d > best.abs_det) best = {d, {s, t, u, v}};
        }
  if (best.abs_det < 0.0) return {0.0, {0, 1, 0, 1}};
  return best;
}

}  // namespace reference

}  // namespace qsep
