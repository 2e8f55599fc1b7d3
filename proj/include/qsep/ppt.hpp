// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0
//
// Pure-state density matrices, partial transposition, the complex Hermitian
// Jacobi eigensolver, the PPT verdict, and the closed-form spectra the 2xm
// and 3x3 cases admit. Composite index convention throughout: iJ = i*m + J,
// row-major and 0-based; the chsh module shares it.

#pragma once

#include <utility>
#include <vector>

#include "qsep/state.hpp"

namespace qsep {

// Verdict tolerance on the minimum eigenvalue of the partial transpose.
// Distinct from the zero-entry tolerance kZeroTol.
inline constexpr double kPptTol = 1e-9;

// rho_{iJ,kL} = C_iJ * conj(C_kL) of a normalized pure state.
struct DensityMatrix {
  int n = 0, m = 0;              // subsystem dimensions
  int dim = 0;                   // n*m
  std::vector<cx> entries;       // dim x dim, row-major
};

enum class Side { A, B };

struct PartialTransposeSpectrum {
  int n = 0, m = 0, dim = 0;
  Side side = Side::A;
  std::vector<cx> sigma;              // dim x dim
  std::vector<double> eigenvalues;    // descending; empty until fill_spectrum
  double min_eigenvalue = 0.0;
  bool ppt_positive = false;
  double tol = kPptTol;
};

struct HermitianEigen {
  std::vector<double> values;   // descending
  std::vector<cx> vectors;      // dim x dim, column k pairs with values[k]
};

// Requires a normalized state; trace identities are meaningless otherwise.
DensityMatrix density_matrix(const StateMatrix& c);

// Index swap on the chosen subsystem: side A gives sigma_{iJ,kL} = rho_{kJ,iL},
// side B gives sigma_{iJ,kL} = rho_{iL,kJ}. Spectrum left empty.
PartialTransposeSpectrum partial_transpose(const DensityMatrix& rho, Side side);

// Cyclic Jacobi for complex Hermitian matrices. Converges when the
// off-diagonal Frobenius mass drops below 1e-14 * ||A||_F; hard cap of 100
// sweeps. Throws on non-Hermitian input (entrywise 1e-12) or non-convergence.
HermitianEigen hermitian_eigen(const std::vector<cx>& a, int dim,
                               bool want_vectors = true);
std::vector<double> hermitian_spectrum(const std::vector<cx>& a, int dim);

bool ppt_verdict(const std::vector<double>& spectrum, double tol = kPptTol);

// Runs the eigensolver and records the verdict.
void fill_spectrum(PartialTransposeSpectrum& pts, double tol = kPptTol);

// density_matrix + partial_transpose + fill_spectrum in one call.
PartialTransposeSpectrum ppt_analyze(const StateMatrix& c, Side side = Side::A,
                                     double tol = kPptTol);

// n = 2 closed form: (dim-4) zeros, +-sqrt(E^total), (1 +- sqrt(1-4E^total))/2,
// descending. Verified in the source up to m = 5 and asserted for larger m.
std::vector<double> closed_form_spectrum_2xm(const StateMatrix& c);

// 3x3 closed form: the roots of x^3 - x^2 + E x - |det C|^2 plus +-sqrt(y)
// over the roots of y^3 - E y^2 + |det C|^2 y - |det C|^4, descending.
std::vector<double> cubic_spectrum_3x3(const StateMatrix& c);

// (Tr sigma, Tr sigma^2); both equal 1 for a normalized pure source.
std::pair<double, double> trace_checks(const std::vector<cx>& sigma, int dim);

}  // namespace qsep
