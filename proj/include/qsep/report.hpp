// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0
//
// JSON views of the analysis results. Text reports print numbers through the
// same dump path, so every figure in a text report appears verbatim in the
// JSON one.

#pragma once

#include <string>

#include <json.hpp>

#include "qsep/chsh.hpp"
#include "qsep/criteria.hpp"
#include "qsep/entanglement.hpp"
#include "qsep/ppt.hpp"

namespace qsep {

// Canonical decimal form of a double, identical to its JSON rendering.
std::string num_str(double x);

// "s,t,u,v" with 1-based indices, as reports cite selectors.
std::string selector_str(QuadSelector sel);

nlohmann::json verdict_json(const SeparabilityVerdict& v);
nlohmann::json reduced_criterion_json(const ReducedCriterion& rc);
nlohmann::json entanglement_json(const EntanglementReport& r);
nlohmann::json factorization_json(const Factorization& f);
nlohmann::json spectrum_json(const PartialTransposeSpectrum& pts);
nlohmann::json chsh_json(const ChshResult& r);

}  // namespace qsep
