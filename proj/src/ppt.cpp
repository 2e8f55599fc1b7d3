// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsep/ppt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsep/cubic.hpp"
#include "qsep/entanglement.hpp"

namespace qsep {

namespace {

double frobenius(const std::vector<cx>& a) {
  double acc = 0.0;
  for (const cx& z : a) acc += std::norm(z);
  return std::sqrt(acc);
}

double offdiag_mass(const std::vector<cx>& a, int dim) {
  double acc = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (i != j) acc += std::norm(a[static_cast<std::size_t>(i) * dim + j]);
  return std::sqrt(acc);
}

}  // namespace

DensityMatrix density_matrix(const StateMatrix& c) {
  if (!c.is_normalized())
    throw error("density_matrix: state must be normalized");
  DensityMatrix rho;
  rho.n = c.rows;
  rho.m = c.cols;
  rho.dim = c.rows * c.cols;
  rho.entries.resize(static_cast<std::size_t>(rho.dim) * rho.dim);
  for (int r = 0; r < rho.dim; ++r)
    for (int s = 0; s < rho.dim; ++s)
      rho.entries[static_cast<std::size_t>(r) * rho.dim + s] =
          c.data[r] * std::conj(c.data[s]);
  return rho;
}

PartialTransposeSpectrum partial_transpose(const DensityMatrix& rho,
                                           Side side) {
  PartialTransposeSpectrum pts;
  pts.n = rho.n;
  pts.m = rho.m;
  pts.dim = rho.dim;
  pts.side = side;
  pts.sigma.resize(rho.entries.size());
  const int m = rho.m;
  auto at = [&](int r, int s) -> const cx& {
    return rho.entries[static_cast<std::size_t>(r) * rho.dim + s];
  };
  for (int i = 0; i < rho.n; ++i)
    for (int J = 0; J < m; ++J)
      for (int k = 0; k < rho.n; ++k)
        for (int L = 0; L < m; ++L) {
          const cx& src = side == Side::A ? at(k * m + J, i * m + L)
                                          : at(i * m + L, k * m + J);
          pts.sigma[static_cast<std::size_t>(i * m + J) * rho.dim +
                    (k * m + L)] = src;
        }
  return pts;
}

HermitianEigen hermitian_eigen(const std::vector<cx>& a_in, int dim,
                               bool want_vectors) {
  if (dim < 1 || a_in.size() != static_cast<std::size_t>(dim) * dim)
    throw error("hermitian_eigen: bad dimensions");
  const double scale = std::max(1.0, frobenius(a_in));
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      const cx& u = a_in[static_cast<std::size_t>(i) * dim + j];
      const cx& l = a_in[static_cast<std::size_t>(j) * dim + i];
      if (std::abs(u - std::conj(l)) > 1e-12 * scale)
        throw error("hermitian_eigen: input not Hermitian");
    }

  std::vector<cx> a(a_in);
  // exact Hermitian symmetrization; stabilizes against rounding in the input
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      cx& u = a[static_cast<std::size_t>(i) * dim + j];
      cx& l = a[static_cast<std::size_t>(j) * dim + i];
      u = 0.5 * (u + std::conj(l));
      l = std::conj(u);
    }
    cx& d = a[static_cast<std::size_t>(i) * dim + i];
    d = cx{d.real(), 0.0};
  }

  std::vector<cx> u_acc;
  if (want_vectors) {
    u_acc.assign(static_cast<std::size_t>(dim) * dim, cx{0.0, 0.0});
    for (int i = 0; i < dim; ++i)
      u_acc[static_cast<std::size_t>(i) * dim + i] = cx{1.0, 0.0};
  }

  const double frob0 = frobenius(a);
  const double target = 1e-14 * frob0;
  auto idx = [dim](int r, int s) {
    return static_cast<std::size_t>(r) * dim + s;
  };

  bool converged = frob0 == 0.0 || offdiag_mass(a, dim) <= target;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    for (int p = 0; p < dim - 1; ++p)
      for (int q = p + 1; q < dim; ++q) {
        const cx z = a[idx(p, q)];
        const double apq = std::abs(z);
        if (apq == 0.0) continue;
        const cx f = z / apq;  // phase
        const double app = a[idx(p, p)].real();
        const double aqq = a[idx(q, q)].real();
        const double tau = (aqq - app) / (2.0 * apq);
        // small-magnitude root of t^2 - 2 tau t - 1 = 0
        double t;
        if (tau >= 0.0)
          t = -1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        if (tau == 0.0) t = 1.0;
        const double cth = 1.0 / std::sqrt(1.0 + t * t);
        const cx s = t * cth * std::conj(f);
        const cx s_conj = std::conj(s);

        // A <- J^H A J, J = I except J_pp = c, J_pq = -conj(s), J_qp = s
        for (int i = 0; i < dim; ++i) {
          const cx aip = a[idx(i, p)], aiq = a[idx(i, q)];
          a[idx(i, p)] = cth * aip + s * aiq;
          a[idx(i, q)] = -s_conj * aip + cth * aiq;
        }
        for (int j = 0; j < dim; ++j) {
          const cx apj = a[idx(p, j)], aqj = a[idx(q, j)];
          a[idx(p, j)] = cth * apj + s_conj * aqj;
          a[idx(q, j)] = -s * apj + cth * aqj;
        }
        a[idx(p, q)] = cx{0.0, 0.0};
        a[idx(q, p)] = cx{0.0, 0.0};
        a[idx(p, p)] = cx{a[idx(p, p)].real(), 0.0};
        a[idx(q, q)] = cx{a[idx(q, q)].real(), 0.0};

        if (want_vectors)
          for (int i = 0; i < dim; ++i) {
            const cx uip = u_acc[idx(i, p)], uiq = u_acc[idx(i, q)];
            u_acc[idx(i, p)] = cth * uip + s * uiq;
            u_acc[idx(i, q)] = -s_conj * uip + cth * uiq;
          }
      }
    converged = offdiag_mass(a, dim) <= target;
  }
  if (!converged) throw error("hermitian_eigen: no convergence in 100 sweeps");

  std::vector<int> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return a[idx(x, x)].real() > a[idx(y, y)].real();
  });

  HermitianEigen out;
  out.values.resize(dim);
  for (int k = 0; k < dim; ++k) out.values[k] = a[idx(order[k], order[k])].real();
  if (want_vectors) {
    out.vectors.resize(static_cast<std::size_t>(dim) * dim);
    for (int k = 0; k < dim; ++k)
      for (int i = 0; i < dim; ++i)
        out.vectors[idx(i, k)] = u_acc[idx(i, order[k])];
  }
  return out;
}

std::vector<double> hermitian_spectrum(const std::vector<cx>& a, int dim) {
  return hermitian_eigen(a, dim, /*want_vectors=*/false).values;
}

bool ppt_verdict(const std::vector<double>& spectrum, double tol) {
  if (spectrum.empty()) throw error("ppt_verdict: empty spectrum");
  double mn = spectrum[0];
  for (double v : spectrum) mn = std::min(mn, v);
  return mn >= -tol;
}

void fill_spectrum(PartialTransposeSpectrum& pts, double tol) {
  pts.eigenvalues = hermitian_spectrum(pts.sigma, pts.dim);
  pts.min_eigenvalue = pts.eigenvalues.back();
  pts.tol = tol;
  pts.ppt_positive = pts.min_eigenvalue >= -tol;
}

PartialTransposeSpectrum ppt_analyze(const StateMatrix& c, Side side,
                                     double tol) {
  PartialTransposeSpectrum pts = partial_transpose(density_matrix(c), side);
  fill_spectrum(pts, tol);
  return pts;
}

std::vector<double> closed_form_spectrum_2xm(const StateMatrix& c) {
  if (c.rows != 2 || c.cols < 2)
    throw error("closed_form_spectrum_2xm: requires a 2xm state with m >= 2");
  if (!c.is_normalized())
    throw error("closed_form_spectrum_2xm: state must be normalized");
  const double e = e_total_value(c);
  if (e > 0.25 + 1e-9)
    throw error("closed_form_spectrum_2xm: E^total above 1/4");
  const double root_e = std::sqrt(std::max(e, 0.0));
  const double disc = std::sqrt(std::max(1.0 - 4.0 * e, 0.0));
  std::vector<double> out(static_cast<std::size_t>(2 * c.cols), 0.0);
  out[0] = (1.0 + disc) / 2.0;
  out[1] = root_e;
  out[out.size() - 2] = -root_e;
  out[out.size() - 1] = (1.0 - disc) / 2.0;
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

std::vector<double> cubic_spectrum_3x3(const StateMatrix& c) {
  if (c.rows != 3 || c.cols != 3)
    throw error("cubic_spectrum_3x3: requires a 3x3 state");
  if (!c.is_normalized())
    throw error("cubic_spectrum_3x3: state must be normalized");
  const double e = e_total_value(c);
  const cx det = c.at(0, 0) * (c.at(1, 1) * c.at(2, 2) - c.at(1, 2) * c.at(2, 1)) -
                 c.at(0, 1) * (c.at(1, 0) * c.at(2, 2) - c.at(1, 2) * c.at(2, 0)) +
                 c.at(0, 2) * (c.at(1, 0) * c.at(2, 1) - c.at(1, 1) * c.at(2, 0));
  const double d2 = std::norm(det);

  std::vector<double> out;
  out.reserve(9);
  for (double x : cubic_real_roots(-1.0, e, -d2)) out.push_back(x);
  for (double y : cubic_real_roots(-e, d2, -d2 * d2)) {
    if (y < -1e-9)
      throw error("cubic_spectrum_3x3: negative squared eigenvalue");
    const double r = std::sqrt(std::max(y, 0.0));
    out.push_back(r);
    out.push_back(-r);
  }
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

std::pair<double, double> trace_checks(const std::vector<cx>& sigma, int dim) {
  if (sigma.size() != static_cast<std::size_t>(dim) * dim)
    throw error("trace_checks: bad dimensions");
  double tr = 0.0;
  for (int i = 0; i < dim; ++i)
    tr += sigma[static_cast<std::size_t>(i) * dim + i].real();
  // Tr sigma^2 = ||sigma||_F^2 for Hermitian sigma
  double tr2 = 0.0;
  for (const cx& z : sigma) tr2 += std::norm(z);
  return {tr, tr2};
}

}  // namespace qsep
