// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0
//
// State coefficient matrices of pure bipartite states: storage, parsing,
// normalization, zero handling and seeded random generation.

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsep {

using cx = std::complex<double>;

// Default modulus threshold under which an entry counts as zero. Every
// operation that speaks of "zero" entries takes this as its tolerance knob.
inline constexpr double kZeroTol = 1e-12;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// n x m coefficient matrix C_iJ of a pure bipartite state, row-major,
// double-precision complex. Treated as immutable once constructed; norm2
// caches sum |C_iJ|^2.
struct StateMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<cx> data;  // rows * cols entries, row-major
  double norm2 = 0.0;

  StateMatrix() = default;
  StateMatrix(int n, int m, std::vector<cx> entries);

  cx at(int i, int j) const {
    return data[static_cast<std::size_t>(i) * cols + j];
  }

  // |norm2 - 1| <= tol; the normalization predicate, not a type distinction.
  bool is_normalized(double tol = 1e-10) const {
    return std::abs(norm2 - 1.0) <= tol;
  }

  StateMatrix transposed() const;
};

// Result of deleting all all-zero rows and columns, with index maps back
// into the parent matrix.
struct ReducedMatrix {
  StateMatrix matrix;
  std::vector<int> kept_rows;
  std::vector<int> kept_cols;
};

enum class StateFormat { json, plain };

// JSON: {"rows": n, "cols": m, "data": [[re, im], ...]} with data row-major.
// Plain: rows separated by '/' or newline, whitespace-separated entries of
// the form a, bi, a+bi, a-bi. Rejects non-finite entries and size mismatches.
StateMatrix parse_state(const std::string& text, StateFormat format);

// JSON form with 17-significant-digit decimals; parse_state(serialize_state(C))
// reproduces C bit for bit.
std::string serialize_state(const StateMatrix& c);

// Scales entries by 1/sqrt(norm2). Rejects the all-zero matrix.
StateMatrix normalize(const StateMatrix& c);

// Removes rows and columns whose entries all have modulus <= tol.
// Rejects matrices with no entry above tol; the reduced matrix of the zero
// state is undefined.
ReducedMatrix reduce(const StateMatrix& c, double tol = kZeroTol);

// 0 iff every entry has modulus > tol, 1 otherwise.
int zero_flag(const StateMatrix& m, double tol = kZeroTol);

// i.i.d. standard complex Gaussian entries, then normalized. Reproducible
// per seed.
StateMatrix random_state(int n, int m, std::uint64_t seed);

// Outer product of seeded Gaussian vectors a (length n) and b (length m),
// normalized; rank one by construction.
StateMatrix random_product_state(int n, int m, std::uint64_t seed);

}  // namespace qsep
