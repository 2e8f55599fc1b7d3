// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "qsep/report.hpp"

using namespace qsep;
using nlohmann::json;

TEST_CASE("num_str matches the JSON rendering and round-trips") {
  for (double x : {0.25, 1.0 / 3.0, 1e-12, -0.4999999999999999, 2.8284271247461903}) {
    const std::string s = num_str(x);
    CHECK(json::parse(s).get<double>() == x);
    CHECK(json(x).dump() == s);
  }
}

TEST_CASE("selectors print 1-based") {
  CHECK(selector_str({0, 1, 0, 1}) == "1,2,1,2");
  CHECK(selector_str({1, 3, 0, 2}) == "2,4,1,3");
}

TEST_CASE("verdict json shape") {
  SeparabilityVerdict v;
  v.separable = false;
  v.q_sum = 0.5;
  v.tol = 1e-12;
  v.witness = QuadSelector{0, 1, 0, 1};
  const json j = verdict_json(v);
  CHECK(j["separable"] == false);
  CHECK(j["q_sum"] == 0.5);
  CHECK(j["witness"] == "1,2,1,2");

  v.separable = true;
  v.witness.reset();
  CHECK(verdict_json(v)["witness"].is_null());
}

TEST_CASE("entanglement json carries every parameter") {
  const double s = 1.0 / std::sqrt(2.0);
  const EntanglementReport r = e_total(StateMatrix(2, 2, {s, 0, 0, s}));
  const json j = entanglement_json(r);
  CHECK(j["total"] == r.total);
  CHECK(j["upper_bound"] == 0.25);
  REQUIRE(j["params"].size() == 1);
  CHECK(j["params"][0]["selector"] == "1,2,1,2");
  CHECK(j["params"][0]["value"] == r.params[0].second);
}

TEST_CASE("spectrum json carries the documented fields") {
  const double s = 1.0 / std::sqrt(2.0);
  const auto pts = ppt_analyze(StateMatrix(2, 2, {s, 0, 0, s}));
  const json j = spectrum_json(pts);
  CHECK(j["dim"] == 4);
  CHECK(j["eigenvalues"].size() == 4);
  CHECK(j["ppt"] == false);
  CHECK(std::abs(j["trace"].get<double>() - 1.0) <= 1e-10);
  CHECK(std::abs(j["trace_sq"].get<double>() - 1.0) <= 1e-10);
  CHECK(j["closed_form"].is_null());
}

TEST_CASE("chsh json embeds the settings at full precision") {
  const double s = 1.0 / std::sqrt(2.0);
  const ChshResult r = chsh_optimize(StateMatrix(2, 2, {s, 0, 0, s}), 4, 11);
  const json j = chsh_json(r);
  CHECK(j["achieved"] == r.achieved);
  CHECK(j["closed_form_max"] == r.closed_form_max);
  CHECK(j["settings"]["q"].size() == 3);
  CHECK(j["settings"]["q"][2] == r.settings.q.z);
  // settings are re-checkable from the report alone
  const MeasurementSetting ms{
      {j["settings"]["q"][0], j["settings"]["q"][1], j["settings"]["q"][2]},
      {j["settings"]["r"][0], j["settings"]["r"][1], j["settings"]["r"][2]},
      {j["settings"]["s"][0], j["settings"]["s"][1], j["settings"]["s"][2]},
      {j["settings"]["t"][0], j["settings"]["t"][1], j["settings"]["t"][2]}};
  CHECK(chsh_expectation(StateMatrix(2, 2, {s, 0, 0, s}), ms) ==
        doctest::Approx(r.achieved).epsilon(1e-12));
}
