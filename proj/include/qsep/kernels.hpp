// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0
//
// Reductions over all 2x2 minors of a state matrix. The production kernels
// are OpenMP-parallel over row pairs; each pair's contribution is accumulated
// by a single thread and the per-pair partials are folded serially in index
// order, so results do not depend on thread count or scheduling. The serial
// implementations in qsep::reference are kept as the comparison baseline for
// tests and the benchmark.

#pragma once

#include "qsep/criteria.hpp"
#include "qsep/state.hpp"

namespace qsep {

struct BestMinor {
  double abs_det = 0.0;
  QuadSelector sel;
};

double minor_abs_sum(const StateMatrix& c);  // sum |det Q|
double minor_sq_sum(const StateMatrix& c);   // sum |det Q|^2
BestMinor best_minor(const StateMatrix& c);  // argmax |det Q|, lexicographic tie-break

// All E^(s,t,u,v) = |det Q|^2 in lexicographic selector order.
std::vector<std::pair<QuadSelector, double>> minor_sq_table(const StateMatrix& c);

namespace reference {
double minor_abs_sum(const StateMatrix& c);
double minor_sq_sum(const StateMatrix& c);
BestMinor best_minor(const StateMatrix& c);
}  // namespace reference

}  // namespace qsep
