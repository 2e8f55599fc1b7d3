// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsep/chsh.hpp"

#include <cmath>

#include "qsep/rng.hpp"

namespace qsep {

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

std::array<cx, 4> pauli_dot(const Vec3& v) {
  return {cx{v.z, 0.0}, cx{v.x, -v.y}, cx{v.x, v.y}, cx{-v.z, 0.0}};
}

namespace {

void require_unit(const Vec3& v, const char* name) {
  if (std::abs(v.norm() - 1.0) > 1e-12)
    throw error(std::string("chsh_operator: ") + name + " is not a unit vector");
}

// (A x B)_{(i,J),(k,L)} = A_ik B_JL, composite index iJ = 2i + J
Mat4 kron2(const std::array<cx, 4>& a, const std::array<cx, 4>& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int J = 0; J < 2; ++J)
      for (int k = 0; k < 2; ++k)
        for (int L = 0; L < 2; ++L)
          out[static_cast<std::size_t>(2 * i + J) * 4 + (2 * k + L)] =
              a[static_cast<std::size_t>(2 * i) + k] *
              b[static_cast<std::size_t>(2 * J) + L];
  return out;
}

Vec3 from_angles(double th, double ph) {
  const double st = std::sin(th);
  return {st * std::cos(ph), st * std::sin(ph), std::cos(th)};
}

// angle layout: [0..3] = theta of q, r, s, t; [4..7] = phi of q, r, s, t
struct Angles {
  std::array<double, 8> a{};
};

MeasurementSetting to_setting(const Angles& ang) {
  return {from_angles(ang.a[0], ang.a[4]), from_angles(ang.a[1], ang.a[5]),
          from_angles(ang.a[2], ang.a[6]), from_angles(ang.a[3], ang.a[7])};
}

struct RestartOutcome {
  double value = 0.0;
  Angles angles;
  std::int64_t evals = 0;
};

constexpr double kGoldenRatio = 0.6180339887498949;

// Maximizes the sinusoidal single-coordinate slice: 8-point scan over one
// period, then golden-section inside the bracketing interval.
template <typename F>
double line_max(F eval, double& coord, std::int64_t& evals) {
  const double center = coord;
  double best_x = center;
  double best_v = -1e300;
  for (int j = 0; j < 8; ++j) {
    const double x = center - M_PI + 2.0 * M_PI * j / 8.0;
    coord = x;
    const double v = eval();
    ++evals;
    if (v > best_v) {
      best_v = v;
      best_x = x;
    }
  }
  double lo = best_x - M_PI / 4.0, hi = best_x + M_PI / 4.0;
  double x1 = hi - kGoldenRatio * (hi - lo);
  double x2 = lo + kGoldenRatio * (hi - lo);
  coord = x1;
  double f1 = eval();
  coord = x2;
  double f2 = eval();
  evals += 2;
  for (int it = 0; it < 50; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGoldenRatio * (hi - lo);
      coord = x2;
      f2 = eval();
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGoldenRatio * (hi - lo);
      coord = x1;
      f1 = eval();
    }
    ++evals;
  }
  coord = f1 > f2 ? x1 : x2;
  const double v = eval();
  ++evals;
  if (v >= best_v) return v;
  coord = best_x;  // fall back to the scan point
  ++evals;
  return eval();
}

RestartOutcome run_restart(const StateMatrix& c, std::uint64_t restart_seed,
                           int passes) {
  GaussianRng rng(restart_seed);
  Angles ang;
  for (int k = 0; k < 4; ++k) {
    ang.a[k] = std::acos(1.0 - 2.0 * rng.uniform());
    ang.a[4 + k] = 2.0 * M_PI * rng.uniform();
  }

  RestartOutcome out;
  auto eval = [&] { return chsh_expectation(c, to_setting(ang)); };
  double cur = eval();
  ++out.evals;
  out.value = cur;
  out.angles = ang;

  int stall = 0;
  for (int pass = 0; pass < passes && stall < 2; ++pass) {
    const double start = cur;
    for (int k = 0; k < 8; ++k) {
      cur = line_max(eval, ang.a[k], out.evals);
      if (k < 4 && std::abs(std::sin(ang.a[k])) < 1e-6) {
        ang.a[4 + k] = 2.0 * M_PI * rng.uniform();
        cur = eval();
        ++out.evals;
      }
      if (cur > out.value) {
        out.value = cur;
        out.angles = ang;
      }
    }
    if (cur - start < 1e-14)
      ++stall;
    else
      stall = 0;
  }
  return out;
}

}  // namespace

Mat4 chsh_operator(const MeasurementSetting& ms) {
  require_unit(ms.q, "Q");
  require_unit(ms.r, "R");
  require_unit(ms.s, "S");
  require_unit(ms.t, "T");
  const auto q = pauli_dot(ms.q), r = pauli_dot(ms.r), s = pauli_dot(ms.s),
             t = pauli_dot(ms.t);
  std::array<cx, 4> q_plus_r, q_minus_r;
  for (int k = 0; k < 4; ++k) {
    q_plus_r[k] = q[k] + r[k];
    q_minus_r[k] = q[k] - r[k];
  }
  const Mat4 first = kron2(q_plus_r, s);
  const Mat4 second = kron2(q_minus_r, t);
  Mat4 out;
  for (int k = 0; k < 16; ++k) out[k] = first[k] + second[k];
  return out;
}

double chsh_expectation(const StateMatrix& c, const MeasurementSetting& ms) {
  if (c.rows != 2 || c.cols != 2)
    throw error("chsh_expectation: requires a 2x2 state");
  const Mat4 h = chsh_operator(ms);
  cx acc{0.0, 0.0};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      acc += std::conj(c.data[a]) * h[static_cast<std::size_t>(a) * 4 + b] *
             c.data[b];
  if (std::abs(acc.imag()) > 1e-12)
    throw error("chsh_expectation: imaginary residue above tolerance");
  return acc.real();
}

double chsh_max_closed(const StateMatrix& c) {
  if (c.rows != 2 || c.cols != 2)
    throw error("chsh_max_closed: requires a 2x2 state");
  const cx det = c.at(0, 0) * c.at(1, 1) - c.at(0, 1) * c.at(1, 0);
  return 2.0 * std::sqrt(c.norm2 * c.norm2 + 4.0 * std::norm(det));
}

ChshResult chsh_optimize(const StateMatrix& c, int budget, std::uint64_t seed,
                         int passes) {
  if (c.rows != 2 || c.cols != 2)
    throw error("chsh_optimize: requires a 2x2 state");
  if (budget < 1) throw error("chsh_optimize: budget must be >= 1 restart");

  std::vector<RestartOutcome> outcomes(budget);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < budget; ++r)
    outcomes[r] = run_restart(c, mix_seed(seed, static_cast<std::uint64_t>(r)),
                              passes);

  int best = 0;
  std::int64_t evals = outcomes[0].evals;
  for (int r = 1; r < budget; ++r) {
    if (outcomes[r].value > outcomes[best].value) best = r;
    evals += outcomes[r].evals;
  }

  ChshResult res;
  res.settings = to_setting(outcomes[best].angles);
  res.achieved = outcomes[best].value;
  res.closed_form_max = chsh_max_closed(c);
  res.gap = res.closed_form_max - res.achieved;
  res.evaluations = evals;
  return res;
}

ChshResult submatrix_chsh(const StateMatrix& c, QuadSelector sel, int budget,
                          std::uint64_t seed) {
  const Mat2 q = submatrix_Q(c, sel);
  const StateMatrix sub(2, 2, {q.m00, q.m01, q.m10, q.m11});
  return chsh_optimize(sub, budget, seed);
}

}  // namespace qsep
