// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "qsep/cubic.hpp"
#include "qsep/entanglement.hpp"
#include "qsep/ppt.hpp"
#include "qsep/rng.hpp"
#include "qsep/state.hpp"

using namespace qsep;

namespace {

StateMatrix bell() {
  const double s = 1.0 / std::sqrt(2.0);
  return StateMatrix(2, 2, {s, 0, 0, s});
}

StateMatrix scaled_identity3() {
  const double s = 1.0 / std::sqrt(3.0);
  return StateMatrix(3, 3, {s, 0, 0, 0, s, 0, 0, 0, s});
}

double spectrum_deviation(const std::vector<double>& a,
                          const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double dev = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    dev = std::max(dev, std::abs(a[k] - b[k]));
  return dev;
}

}  // namespace

TEST_CASE("density matrix of basis and Bell states") {
  const DensityMatrix basis = density_matrix(StateMatrix(2, 2, {1, 0, 0, 0}));
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      CHECK(basis.entries[static_cast<std::size_t>(r) * 4 + s] ==
            (r == 0 && s == 0 ? cx{1, 0} : cx{0, 0}));

  const DensityMatrix rho = density_matrix(bell());
  // nonzero corners at the |00>,|11> block, all equal 1/2
  for (int r : {0, 3})
    for (int s : {0, 3})
      CHECK(std::abs(rho.entries[static_cast<std::size_t>(r) * 4 + s] -
                     cx{0.5, 0}) < 1e-15);
  CHECK(std::abs(rho.entries[1 * 4 + 1]) == 0.0);

  // Hermitian, unit trace, idempotent (rank one)
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      CHECK(std::abs(rho.entries[static_cast<std::size_t>(r) * 4 + s] -
                     std::conj(rho.entries[static_cast<std::size_t>(s) * 4 + r])) <
            1e-14);
  cx tr{0, 0};
  for (int r = 0; r < 4; ++r) tr += rho.entries[static_cast<std::size_t>(r) * 4 + r];
  CHECK(std::abs(tr - cx{1, 0}) < 1e-12);
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) {
      cx acc{0, 0};
      for (int k = 0; k < 4; ++k)
        acc += rho.entries[static_cast<std::size_t>(r) * 4 + k] *
               rho.entries[static_cast<std::size_t>(k) * 4 + s];
      CHECK(std::abs(acc - rho.entries[static_cast<std::size_t>(r) * 4 + s]) <
            1e-10);
    }

  CHECK_THROWS_AS(density_matrix(StateMatrix(2, 2, {1, 0, 0, 1})), error);
}

TEST_CASE("partial transpose of the Bell density matrix") {
  const PartialTransposeSpectrum pts =
      partial_transpose(density_matrix(bell()), Side::A);
  // corner swap: the coherence moves onto the off-diagonal block
  CHECK(std::abs(pts.sigma[0 * 4 + 0] - cx{0.5, 0}) < 1e-15);
  CHECK(std::abs(pts.sigma[3 * 4 + 3] - cx{0.5, 0}) < 1e-15);
  CHECK(std::abs(pts.sigma[1 * 4 + 2] - cx{0.5, 0}) < 1e-15);
  CHECK(std::abs(pts.sigma[2 * 4 + 1] - cx{0.5, 0}) < 1e-15);
  CHECK(std::abs(pts.sigma[0 * 4 + 3]) == 0.0);
  // Hermitian
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      CHECK(std::abs(pts.sigma[static_cast<std::size_t>(r) * 4 + s] -
                     std::conj(pts.sigma[static_cast<std::size_t>(s) * 4 + r])) <
            1e-14);
}

TEST_CASE("composing both partial transposes gives the full transpose") {
  const StateMatrix c = random_state(3, 4, 37);
  const DensityMatrix rho = density_matrix(c);
  const PartialTransposeSpectrum ta = partial_transpose(rho, Side::A);
  DensityMatrix mid;
  mid.n = rho.n;
  mid.m = rho.m;
  mid.dim = rho.dim;
  mid.entries = ta.sigma;
  const PartialTransposeSpectrum tab = partial_transpose(mid, Side::B);
  for (int r = 0; r < rho.dim; ++r)
    for (int s = 0; s < rho.dim; ++s)
      CHECK(std::abs(tab.sigma[static_cast<std::size_t>(r) * rho.dim + s] -
                     rho.entries[static_cast<std::size_t>(s) * rho.dim + r]) <
            1e-15);
  // and the full transpose is isospectral with rho itself
  const auto spec = hermitian_spectrum(tab.sigma, rho.dim);
  CHECK(spec[0] == doctest::Approx(1.0).epsilon(1e-10));
  for (std::size_t k = 1; k < spec.size(); ++k)
    CHECK(std::abs(spec[k]) < 1e-10);
}

TEST_CASE("sides A and B are isospectral") {
  for (int k = 0; k < 8; ++k) {
    const StateMatrix c = random_state(2 + k % 3, 2 + (k / 3) % 3, 500 + k);
    const auto sa = ppt_analyze(c, Side::A).eigenvalues;
    const auto sb = ppt_analyze(c, Side::B).eigenvalues;
    CHECK(spectrum_deviation(sa, sb) <= 1e-10);
  }
}

TEST_CASE("hermitian_eigen") {
  SUBCASE("already diagonal") {
    const std::vector<cx> d{cx{1, 0}, 0, 0, 0, 0, cx{0, 0}, 0, 0,
                            0, 0, cx{0, 0}, 0, 0, 0, 0, cx{0, 0}};
    const auto vals = hermitian_spectrum(d, 4);
    CHECK(vals == std::vector<double>{1, 0, 0, 0});
  }
  SUBCASE("2x2 with known eigenvalues 4 and 1") {
    const std::vector<cx> a{cx{2, 0}, cx{1, 1}, cx{1, -1}, cx{3, 0}};
    const auto vals = hermitian_spectrum(a, 2);
    CHECK(vals[0] == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(vals[1] == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("Bell sigma spectrum") {
    const auto pts = ppt_analyze(bell());
    const std::vector<double> want{0.5, 0.5, 0.5, -0.5};
    CHECK(spectrum_deviation(pts.eigenvalues, want) <= 1e-10);
    CHECK_FALSE(pts.ppt_positive);
    CHECK(pts.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));
  }
  SUBCASE("reconstruction residual on random Hermitian input") {
    GaussianRng rng(11);
    const int dim = 9;
    std::vector<cx> a(static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j <= i; ++j) {
        const cx z = rng.complex_normal();
        a[static_cast<std::size_t>(i) * dim + j] = z;
        a[static_cast<std::size_t>(j) * dim + i] = std::conj(z);
        if (i == j) a[static_cast<std::size_t>(i) * dim + j] = cx{z.real(), 0};
      }
    const HermitianEigen eig = hermitian_eigen(a, dim);
    double resid = 0.0;
    for (int r = 0; r < dim; ++r)
      for (int s = 0; s < dim; ++s) {
        cx acc{0, 0};
        for (int k = 0; k < dim; ++k)
          acc += eig.vectors[static_cast<std::size_t>(r) * dim + k] *
                 eig.values[k] *
                 std::conj(eig.vectors[static_cast<std::size_t>(s) * dim + k]);
        resid = std::max(resid,
                         std::abs(acc - a[static_cast<std::size_t>(r) * dim + s]));
      }
    CHECK(resid <= 1e-10);
    for (std::size_t k = 1; k < eig.values.size(); ++k)
      CHECK(eig.values[k - 1] >= eig.values[k]);
  }
  SUBCASE("rejects non-Hermitian input") {
    const std::vector<cx> bad{cx{1, 0}, cx{1, 0}, cx{0.5, 0}, cx{1, 0}};
    CHECK_THROWS_AS(hermitian_spectrum(bad, 2), error);
  }
}

TEST_CASE("ppt_verdict") {
  CHECK(ppt_analyze(random_product_state(3, 4, 2)).ppt_positive);
  CHECK_FALSE(ppt_analyze(bell()).ppt_positive);
  CHECK(ppt_verdict({1.0, 0.0, -1e-10}, 1e-9));
  CHECK_FALSE(ppt_verdict({1.0, -1e-6}, 1e-9));
}

TEST_CASE("ppt positive implies rank-one spectrum") {
  for (int k = 0; k < 10; ++k) {
    const StateMatrix c = random_product_state(2 + k % 4, 2 + (k / 4) % 3,
                                               1700 + k);
    const auto pts = ppt_analyze(c);
    REQUIRE(pts.ppt_positive);
    CHECK(std::abs(pts.eigenvalues[0] - 1.0) <= 1e-8);
    for (std::size_t i = 1; i < pts.eigenvalues.size(); ++i)
      CHECK(std::abs(pts.eigenvalues[i]) <= 1e-8);
  }
}

TEST_CASE("closed-form 2xm spectrum") {
  SUBCASE("Bell state sits at the E = 1/4 boundary") {
    // the sqrt amplifies the one-ulp rounding of E there; 1e-7 is the
    // attainable agreement at the degenerate point
    const auto cf = closed_form_spectrum_2xm(bell());
    const std::vector<double> want{0.5, 0.5, 0.5, -0.5};
    CHECK(spectrum_deviation(cf, want) <= 1e-7);
  }
  SUBCASE("product 2x3") {
    const auto cf = closed_form_spectrum_2xm(random_product_state(2, 3, 8));
    CHECK(cf.size() == 6);
    CHECK(cf[0] == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t k = 1; k < cf.size(); ++k) CHECK(std::abs(cf[k]) <= 1e-12);
  }
  SUBCASE("matches the eigensolver on random states") {
    for (int k = 0; k < 40; ++k) {
      const int m = 2 + k % 6;
      const StateMatrix c = random_state(2, m, 2500 + k);
      const auto cf = closed_form_spectrum_2xm(c);
      const auto js = ppt_analyze(c).eigenvalues;
      CHECK(spectrum_deviation(cf, js) <= 1e-8);
    }
  }
  SUBCASE("negation symmetry of the paired eigenvalues") {
    const StateMatrix c = random_state(2, 5, 77);
    const double e = e_total_value(c);
    auto spec = ppt_analyze(c).eigenvalues;
    // remove (1 +- sqrt(1-4E))/2, the rest must be symmetric under negation
    const double disc = std::sqrt(std::max(1.0 - 4.0 * e, 0.0));
    auto drop = [&](double v) {
      for (auto it = spec.begin(); it != spec.end(); ++it)
        if (std::abs(*it - v) < 1e-8) return void(spec.erase(it));
      FAIL("expected eigenvalue missing");
    };
    drop((1.0 + disc) / 2.0);
    drop((1.0 - disc) / 2.0);
    std::vector<double> negated;
    for (double v : spec) negated.push_back(-v);
    std::sort(negated.begin(), negated.end(), std::greater<double>());
    CHECK(spectrum_deviation(spec, negated) <= 1e-8);
  }
  CHECK_THROWS_AS(closed_form_spectrum_2xm(random_state(3, 3, 1)), error);
  CHECK_THROWS_AS(closed_form_spectrum_2xm(random_state(2, 1, 1)), error);
}

TEST_CASE("cubic_real_roots") {
  // (x-1)(x-2)(x-3)
  const auto r = cubic_real_roots(-6.0, 11.0, -6.0);
  CHECK(r[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r[2] == doctest::Approx(1.0).epsilon(1e-12));
  // triple root (x - 1/3)^3; coefficient rounding limits the attainable
  // accuracy to about the cube root of machine epsilon
  const auto t = cubic_real_roots(-1.0, 1.0 / 3.0, -1.0 / 27.0);
  for (double x : t) CHECK(x == doctest::Approx(1.0 / 3.0).epsilon(3e-5));
}

TEST_CASE("cubic 3x3 spectrum") {
  SUBCASE("product state gives the rank-one spectrum") {
    const auto cf = cubic_spectrum_3x3(random_product_state(3, 3, 5));
    CHECK(cf.size() == 9);
    CHECK(cf[0] == doctest::Approx(1.0).epsilon(1e-10));
    for (std::size_t k = 1; k < cf.size(); ++k) CHECK(std::abs(cf[k]) <= 1e-8);
  }
  SUBCASE("identity/sqrt(3): triple roots at 1/3 and 1/9") {
    // both cubics degenerate to triple roots, so agreement is limited by
    // the multiple-root conditioning, not by the eigensolver
    const auto cf = cubic_spectrum_3x3(scaled_identity3());
    const auto js = ppt_analyze(scaled_identity3()).eigenvalues;
    CHECK(spectrum_deviation(cf, js) <= 1e-5);
    for (int k = 0; k < 6; ++k)
      CHECK(std::abs(std::abs(cf[k < 3 ? k : k + 3]) - 1.0 / 3.0) <= 1e-5);
  }
  SUBCASE("matches the eigensolver on random 3x3 states") {
    for (int k = 0; k < 25; ++k) {
      const StateMatrix c = random_state(3, 3, 4100 + k);
      const auto cf = cubic_spectrum_3x3(c);
      const auto js = ppt_analyze(c).eigenvalues;
      CHECK(spectrum_deviation(cf, js) <= 1e-8);
    }
  }
  CHECK_THROWS_AS(cubic_spectrum_3x3(random_state(2, 3, 1)), error);
}

TEST_CASE("trace identities") {
  const auto bell_pts = ppt_analyze(bell());
  const auto [bt, bt2] = trace_checks(bell_pts.sigma, bell_pts.dim);
  CHECK(bt == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bt2 == doctest::Approx(1.0).epsilon(1e-12));  // 3*(1/2)^2 + (1/2)^2

  for (int k = 0; k < 15; ++k) {
    const int n = 2 + k % 4, m = 2 + (k / 4) % 4;
    const StateMatrix c = (k % 2) ? random_state(n, m, 6100 + k)
                                  : random_product_state(n, m, 6100 + k);
    const auto pts = ppt_analyze(c);
    const auto [tr, tr2] = trace_checks(pts.sigma, pts.dim);
    CHECK(std::abs(tr - 1.0) <= 1e-10);
    CHECK(std::abs(tr2 - 1.0) <= 1e-10);
    // and the spectral versions of the same identities
    double s1 = 0.0, s2 = 0.0;
    for (double v : pts.eigenvalues) {
      s1 += v;
      s2 += v * v;
    }
    CHECK(std::abs(s1 - 1.0) <= 1e-10);
    CHECK(std::abs(s2 - 1.0) <= 1e-10);
  }
}
