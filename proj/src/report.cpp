// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsep/report.hpp"

namespace qsep {

std::string num_str(double x) { return nlohmann::json(x).dump(); }

std::string selector_str(QuadSelector sel) {
  return std::to_string(sel.s + 1) + "," + std::to_string(sel.t + 1) + "," +
         std::to_string(sel.u + 1) + "," + std::to_string(sel.v + 1);
}

nlohmann::json verdict_json(const SeparabilityVerdict& v) {
  nlohmann::json j;
  j["separable"] = v.separable;
  j["q_sum"] = v.q_sum;
  j["tol"] = v.tol;
  j["witness"] = v.witness ? nlohmann::json(selector_str(*v.witness))
                           : nlohmann::json(nullptr);
  return j;
}

nlohmann::json reduced_criterion_json(const ReducedCriterion& rc) {
  return {{"value", rc.value}, {"separable", rc.separable}};
}

nlohmann::json entanglement_json(const EntanglementReport& r) {
  nlohmann::json params = nlohmann::json::array();
  for (const auto& [sel, val] : r.params)
    params.push_back({{"selector", selector_str(sel)}, {"value", val}});
  return {{"total", r.total},
          {"upper_bound", r.upper_bound},
          {"maxent_residual", r.maxent_residual},
          {"params", params}};
}

nlohmann::json factorization_json(const Factorization& f) {
  auto vec = [](const std::vector<cx>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const cx& z : v) out.push_back({z.real(), z.imag()});
    return out;
  };
  return {{"a", vec(f.a)}, {"b", vec(f.b)}, {"residual", f.residual}};
}

nlohmann::json spectrum_json(const PartialTransposeSpectrum& pts) {
  nlohmann::json j;
  j["dim"] = pts.dim;
  j["side"] = pts.side == Side::A ? "A" : "B";
  j["eigenvalues"] = pts.eigenvalues;
  const auto [tr, tr2] = trace_checks(pts.sigma, pts.dim);
  j["trace"] = tr;
  j["trace_sq"] = tr2;
  j["ppt"] = pts.ppt_positive;
  j["min_eigenvalue"] = pts.min_eigenvalue;
  j["tol"] = pts.tol;
  j["closed_form"] = nullptr;
  return j;
}

nlohmann::json chsh_json(const ChshResult& r) {
  auto vec = [](const Vec3& v) {
    return nlohmann::json::array({v.x, v.y, v.z});
  };
  return {{"achieved", r.achieved},
          {"closed_form_max", r.closed_form_max},
          {"gap", r.gap},
          {"evaluations", r.evaluations},
          {"settings",
           {{"q", vec(r.settings.q)},
            {"r", vec(r.settings.r)},
            {"s", vec(r.settings.s)},
            {"t", vec(r.settings.t)}}}};
}

}  // namespace qsep
