// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "qsep/chsh.hpp"
#include "qsep/criteria.hpp"
#include "qsep/entanglement.hpp"
#include "qsep/oracle.hpp"
#include "qsep/ppt.hpp"
#include "qsep/state.hpp"

using namespace qsep;

namespace {

StateMatrix bell() {
  const double s = 1.0 / std::sqrt(2.0);
  return StateMatrix(2, 2, {s, 0, 0, s});
}

}  // namespace

TEST_CASE("schmidt_rank on known states") {
  CHECK(oracle::schmidt_rank(random_product_state(4, 5, 3)).rank == 1);

  const auto b = oracle::schmidt_rank(bell());
  CHECK(b.rank == 2);
  CHECK(b.values[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));
  CHECK(b.values[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));

  const double s = 1.0 / std::sqrt(3.0);
  const auto id3 =
      oracle::schmidt_rank(StateMatrix(3, 3, {s, 0, 0, 0, s, 0, 0, 0, s}));
  CHECK(id3.rank == 3);
  for (double v : id3.values)
    CHECK(v == doctest::Approx(s).epsilon(1e-13));
}

TEST_CASE("singular values preserve the Frobenius norm") {
  for (int k = 0; k < 20; ++k) {
    const int n = 1 + k % 5, m = 1 + (k / 5) % 4;
    StateMatrix c = random_state(n, m, 150 + k);
    if (k % 2) {
      std::vector<cx> d = c.data;
      for (cx& z : d) z *= 2.5;
      c = StateMatrix(n, m, std::move(d));
    }
    const auto profile = oracle::schmidt_rank(c);
    CHECK(profile.values.size() == static_cast<std::size_t>(std::min(n, m)));
    double sum = 0.0;
    for (double v : profile.values) sum += v * v;
    CHECK(std::abs(sum - c.norm2) <= 1e-10 * std::max(1.0, c.norm2));
    for (std::size_t i = 1; i < profile.values.size(); ++i)
      CHECK(profile.values[i - 1] >= profile.values[i]);
  }
}

TEST_CASE("e_total_gram") {
  CHECK(oracle::e_total_gram(bell()) == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(std::abs(oracle::e_total_gram(random_product_state(3, 4, 6))) <= 1e-15);
  for (int k = 0; k < 25; ++k) {
    const int n = 2 + k % 4, m = 2 + (k / 4) % 4;
    const StateMatrix c = random_state(n, m, 2200 + k);
    const double direct = e_total_value(c);
    CHECK(std::abs(direct - oracle::e_total_gram(c)) <=
          1e-10 * std::max(1.0, direct));
  }
}

TEST_CASE("grid_chsh") {
  SUBCASE("Bell at resolution 8 gets close to the quantum maximum") {
    CHECK(oracle::grid_chsh(bell(), 8) >= 2.6);
  }
  SUBCASE("product states respect the classical bound") {
    const StateMatrix p = random_product_state(2, 2, 12);
    CHECK(oracle::grid_chsh(p, 8) <= 2.0 * p.norm2 + 1e-10);
  }
  SUBCASE("grid value lower-bounds the optimizer") {
    for (int k = 0; k < 6; ++k) {
      const StateMatrix c = random_state(2, 2, 910 + k);
      const double grid = oracle::grid_chsh(c, 6);
      const double opt = chsh_optimize(c, 20, 1).achieved;
      CHECK(grid <= opt + 1e-9);
    }
  }
  SUBCASE("parallel and serial grids agree exactly") {
    for (int k = 0; k < 4; ++k) {
      const StateMatrix c = random_state(2, 2, 33 + k);
      CHECK(oracle::grid_chsh(c, 7) == oracle::reference::grid_chsh(c, 7));
    }
  }
  CHECK_THROWS_AS(oracle::grid_chsh(bell(), 13), error);
  CHECK_THROWS_AS(oracle::grid_chsh(random_state(3, 3, 1), 4), error);
}

TEST_CASE("four-way separability agreement") {
  for (int k = 0; k < 32; ++k) {
    const int n = 2 + k % 4, m = 2 + (k / 4) % 4;
    const StateMatrix c = (k % 2) ? random_state(n, m, 5500 + k)
                                  : random_product_state(n, m, 5500 + k);
    const bool sep = is_separable(c).separable;
    CHECK(sep == reduced_criterion(c).separable);
    CHECK(sep == (oracle::schmidt_rank(c).rank == 1));
    CHECK(sep == ppt_analyze(c).ppt_positive);
    CHECK(sep == (e_total_value(c) <= kZeroTol));
  }
}

TEST_CASE("agreement survives inserted zero rows and columns") {
  // padding with all-zero lines changes neither separability nor the verdicts
  for (int k = 0; k < 12; ++k) {
    const int n = 2 + k % 3, m = 2 + (k / 3) % 3;
    const StateMatrix base = (k % 2) ? random_state(n, m, 7700 + k)
                                     : random_product_state(n, m, 7700 + k);
    std::vector<cx> padded(static_cast<std::size_t>(n + 1) * (m + 1), cx{0, 0});
    const int zero_row = k % (n + 1), zero_col = k % (m + 1);
    for (int i = 0, ii = 0; i < n + 1; ++i) {
      if (i == zero_row) continue;
      for (int j = 0, jj = 0; j < m + 1; ++j) {
        if (j == zero_col) continue;
        padded[static_cast<std::size_t>(i) * (m + 1) + j] = base.at(ii, jj++);
      }
      ++ii;
    }
    const StateMatrix c(n + 1, m + 1, std::move(padded));
    const bool want = is_separable(base).separable;
    CHECK(is_separable(c).separable == want);
    CHECK(reduced_criterion(c).separable == want);
    CHECK((oracle::schmidt_rank(c).rank == 1) == want);
    CHECK(ppt_analyze(c).ppt_positive == want);
    // the reduction recovers the embedded matrix exactly
    const ReducedMatrix r = reduce(c);
    CHECK(r.matrix.data == base.data);
  }
}
