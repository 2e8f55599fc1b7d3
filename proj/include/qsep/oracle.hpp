// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent brute-force cross-checks, deliberately built on different
// algorithms than the main path: one-sided Jacobi SVD instead of minor
// enumeration, a Gram-trace identity instead of the selector sum, and an
// exhaustive settings grid instead of local search. Test and verification
// surface only; not part of the minimal public API.

#pragma once

#include "qsep/state.hpp"

namespace qsep::oracle {

struct SingularProfile {
  std::vector<double> values;  // descending, length min(n,m)
  int rank = 0;                // count of values > tol * values[0]
};

// Singular values of C via one-sided Jacobi; rank at relative tolerance.
SingularProfile schmidt_rank(const StateMatrix& c, double tol = kZeroTol);

// E^total through the Cauchy-Binet identity [(Tr G)^2 - Tr G^2] / 2, G = C C^H.
double e_total_gram(const StateMatrix& c);

// Max CHSH expectation over an exhaustive grid of resolution^2 Bloch
// directions per observable (resolution <= 12). Certified lower bound on the
// true maximum; every grid point is a candidate setting of the optimizer.
double grid_chsh(const StateMatrix& c, int resolution);

namespace reference {
// Serial grid search, kept for the benchmark and scheduling-independence tests.
double grid_chsh(const StateMatrix& c, int resolution);
}  // namespace reference

}  // namespace qsep::oracle
