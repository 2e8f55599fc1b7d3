// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0
//
// qsep command line: separability analysis, partial-transpose spectra, CHSH
// optimization, maximally-entangled state generation, randomized sweeps and
// the release verification gate. Reports go to stdout (text or JSON, with
// identical numbers); stage timings go to stderr so reports stay byte-stable
// across runs.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsep/chsh.hpp"
#include "qsep/criteria.hpp"
#include "qsep/entanglement.hpp"
#include "qsep/kernels.hpp"
#include "qsep/oracle.hpp"
#include "qsep/ppt.hpp"
#include "qsep/report.hpp"
#include "qsep/rng.hpp"
#include "qsep/state.hpp"

namespace {

using nlohmann::json;
using namespace qsep;

class StageTimer {
 public:
  explicit StageTimer(std::string name)
      : name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    std::cerr << "# stage " << name_ << ": " << us / 1000.0 << " ms\n";
  }

 private:
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StateMatrix load_state(const std::string& path, bool do_normalize) {
  const std::string text = read_file(path);
  StateFormat fmt = StateFormat::plain;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    if (ch == '{') fmt = StateFormat::json;
    break;
  }
  StateMatrix c = parse_state(text, fmt);
  return do_normalize ? normalize(c) : c;
}

json input_json(const std::string& path, const StateMatrix& c) {
  return {{"path", path},
          {"rows", c.rows},
          {"cols", c.cols},
          {"norm2", c.norm2},
          {"normalized", c.is_normalized()}};
}

json state_json(const StateMatrix& c) {
  json data = json::array();
  for (const cx& z : c.data) data.push_back({z.real(), z.imag()});
  return {{"rows", c.rows}, {"cols", c.cols}, {"data", data}};
}

void emit(const json& j, const std::string& format,
          const std::vector<std::string>& text_lines) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& line : text_lines) std::cout << line << "\n";
  }
}

QuadSelector parse_selector(const std::string& spec) {
  QuadSelector sel;
  int vals[4];
  char comma;
  std::istringstream ss(spec);
  for (int k = 0; k < 4; ++k) {
    if (k && !(ss >> comma && comma == ','))
      throw error("selector must be s,t,u,v (1-based)");
    if (!(ss >> vals[k])) throw error("selector must be s,t,u,v (1-based)");
  }
  sel.s = vals[0] - 1;
  sel.t = vals[1] - 1;
  sel.u = vals[2] - 1;
  sel.v = vals[3] - 1;
  return sel;
}

json closed_form_json(const StateMatrix& c,
                      const std::vector<double>& eigensolver) {
  std::vector<double> cf;
  std::string method;
  bool extrapolated = false;
  if (c.rows == 2 && c.cols >= 2) {
    cf = closed_form_spectrum_2xm(c);
    method = "2xm";
    extrapolated = c.cols > 5;  // beyond the source-verified cases
  } else if (c.rows == 3 && c.cols == 3) {
    cf = cubic_spectrum_3x3(c);
    method = "3x3_cubic";
  } else {
    return nullptr;
  }
  double dev = 0.0;
  for (std::size_t k = 0; k < cf.size(); ++k)
    dev = std::max(dev, std::abs(cf[k] - eigensolver[k]));
  return {{"method", method},
          {"eigenvalues", cf},
          {"max_deviation", dev},
          {"extrapolated", extrapolated}};
}

// ---------------------------------------------------------------- analyze --

int cmd_analyze(const std::string& input, double tol, double ppt_tol,
                const std::string& format, bool all_params, int top,
                bool do_normalize, bool with_ppt, bool with_chsh, int budget,
                std::uint64_t seed) {
  StateMatrix c = [&] {
    StageTimer t("parse");
    return load_state(input, do_normalize);
  }();

  SeparabilityVerdict verdict;
  ReducedCriterion rc;
  EntanglementReport ent;
  {
    StageTimer t("criteria");
    verdict = is_separable(c, tol);
    rc = reduced_criterion(c, tol);
    ent = e_total(c);
  }

  json j;
  j["input"] = input_json(input, c);
  j["separability"] = verdict_json(verdict);
  j["reduced_criterion"] = reduced_criterion_json(rc);
  j["entanglement"] = entanglement_json(ent);
  j["factorization"] = nullptr;

  std::vector<std::string> lines;
  lines.push_back("input: " + input + " (" + std::to_string(c.rows) + "x" +
                  std::to_string(c.cols) + "), norm2 = " + num_str(c.norm2) +
                  ", normalized = " + (c.is_normalized() ? "true" : "false"));
  lines.push_back(std::string("separable: ") +
                  (verdict.separable ? "true" : "false"));
  lines.push_back("q_sum = " + num_str(verdict.q_sum) + " (tol " +
                  num_str(verdict.tol) + ")");
  if (verdict.witness)
    lines.push_back("witness: selector " + selector_str(*verdict.witness));
  lines.push_back("reduced criterion: value = " + num_str(rc.value) +
                  ", separable = " + (rc.separable ? "true" : "false"));
  lines.push_back("E_total = " + num_str(ent.total));
  lines.push_back("upper bound = " + num_str(ent.upper_bound));
  lines.push_back("maxent residual = " + num_str(ent.maxent_residual));

  if (verdict.separable) {
    StageTimer t("factorize");
    const Factorization f = factorize(c, tol);
    j["factorization"] = factorization_json(f);
    lines.push_back("factorization residual = " + num_str(f.residual));
  }

  auto ranked = ent.params;
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  const std::size_t shown =
      all_params ? ranked.size()
                 : std::min<std::size_t>(ranked.size(), std::max(top, 0));
  lines.push_back("params (top " + std::to_string(shown) + " of " +
                  std::to_string(ranked.size()) + "):");
  for (std::size_t k = 0; k < shown; ++k)
    lines.push_back("  E[" + selector_str(ranked[k].first) +
                    "] = " + num_str(ranked[k].second));

  if (with_ppt) {
    StageTimer t("ppt");
    if (!c.is_normalized())
      throw error("ppt stage requires a normalized state (pass --normalize)");
    PartialTransposeSpectrum pts = ppt_analyze(c, Side::A, ppt_tol);
    json pj = spectrum_json(pts);
    pj["closed_form"] = closed_form_json(c, pts.eigenvalues);
    j["ppt"] = pj;
    lines.push_back(std::string("ppt positive: ") +
                    (pts.ppt_positive ? "true" : "false") +
                    ", min eigenvalue = " + num_str(pts.min_eigenvalue));
  } else {
    j["ppt"] = nullptr;
  }

  if (with_chsh) {
    StageTimer t("chsh");
    if (c.rows != 2 || c.cols != 2)
      throw error("chsh stage requires a 2x2 state");
    const ChshResult r = chsh_optimize(c, budget, seed);
    j["chsh"] = chsh_json(r);
    lines.push_back("chsh achieved = " + num_str(r.achieved) +
                    ", closed form = " + num_str(r.closed_form_max));
  } else {
    j["chsh"] = nullptr;
  }

  emit(j, format, lines);
  return verdict.separable ? 0 : 1;
}

// -------------------------------------------------------------------- ppt --

int cmd_ppt(const std::string& input, const std::string& side_name,
            double ppt_tol, bool closed_form, const std::string& format,
            bool do_normalize) {
  StateMatrix c = [&] {
    StageTimer t("parse");
    return load_state(input, do_normalize);
  }();
  if (!c.is_normalized())
    throw error("ppt requires a normalized state (pass --normalize)");
  const Side side = side_name == "B" ? Side::B : Side::A;

  PartialTransposeSpectrum pts;
  {
    StageTimer t("spectrum");
    pts = ppt_analyze(c, side, ppt_tol);
  }
  json j = spectrum_json(pts);
  if (closed_form) j["closed_form"] = closed_form_json(c, pts.eigenvalues);

  std::vector<std::string> lines;
  lines.push_back("dim = " + std::to_string(pts.dim) + ", side " + side_name);
  std::string ev = "eigenvalues:";
  for (double v : pts.eigenvalues) ev += " " + num_str(v);
  lines.push_back(ev);
  const auto [tr, tr2] = trace_checks(pts.sigma, pts.dim);
  lines.push_back("trace = " + num_str(tr) + ", trace_sq = " + num_str(tr2));
  lines.push_back(std::string("ppt positive: ") +
                  (pts.ppt_positive ? "true" : "false") +
                  " (min eigenvalue " + num_str(pts.min_eigenvalue) + ", tol " +
                  num_str(pts.tol) + ")");
  if (closed_form && !j["closed_form"].is_null()) {
    std::string cfl = "closed form (" +
                      j["closed_form"]["method"].get<std::string>() + "):";
    for (const auto& v : j["closed_form"]["eigenvalues"])
      cfl += " " + num_str(v.get<double>());
    lines.push_back(cfl);
    lines.push_back(
        "closed form max deviation = " +
        num_str(j["closed_form"]["max_deviation"].get<double>()));
  }

  emit(j, format, lines);
  return pts.ppt_positive ? 0 : 1;
}

// ------------------------------------------------------------------- chsh --

int cmd_chsh(const std::string& input, const std::string& selector_spec,
             int budget, int passes, std::uint64_t seed,
             const std::string& format, bool do_normalize) {
  StateMatrix c = [&] {
    StageTimer t("parse");
    return load_state(input, do_normalize);
  }();

  json j;
  std::vector<std::string> lines;
  ChshResult r;
  {
    StageTimer t("optimize");
    if (!selector_spec.empty()) {
      const QuadSelector sel = parse_selector(selector_spec);
      r = submatrix_chsh(c, sel, budget, seed);
      j["selector"] = selector_str(sel);
      j["e_param"] = e_param(c, sel);
      lines.push_back("selector " + selector_str(sel) +
                      ", E = " + num_str(j["e_param"].get<double>()));
    } else {
      r = chsh_optimize(c, budget, seed, passes);
    }
  }
  json rj = chsh_json(r);
  for (auto& [k, v] : rj.items()) j[k] = v;

  lines.push_back("achieved = " + num_str(r.achieved));
  lines.push_back("closed form max = " + num_str(r.closed_form_max));
  lines.push_back("gap = " + num_str(r.gap));
  lines.push_back("evaluations = " + std::to_string(r.evaluations));
  auto vline = [&](const char* name, const Vec3& v) {
    return std::string(name) + " = (" + num_str(v.x) + ", " + num_str(v.y) +
           ", " + num_str(v.z) + ")";
  };
  lines.push_back(vline("Q", r.settings.q));
  lines.push_back(vline("R", r.settings.r));
  lines.push_back(vline("S", r.settings.s));
  lines.push_back(vline("T", r.settings.t));

  emit(j, format, lines);
  return 0;
}

// ----------------------------------------------------------------- maxent --

int cmd_maxent(int n, int m, std::uint64_t seed, const std::string& output,
               const std::string& format) {
  StateMatrix c = [&] {
    StageTimer t("generate");
    return generate_maxent(n, m, seed);
  }();
  const double total = e_total_value(c);
  const double bound = e_upper_bound(n, m);
  const double residual = maxent_residual_any(c);

  json j;
  j["rows"] = n;
  j["cols"] = m;
  j["seed"] = seed;
  j["e_total"] = total;
  j["upper_bound"] = bound;
  j["residual"] = residual;
  j["state"] = state_json(c);
  j["output"] = nullptr;
  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw error("cannot write output file: " + output);
    out << serialize_state(c) << "\n";
    j["output"] = output;
  }

  std::vector<std::string> lines;
  lines.push_back("maxent " + std::to_string(n) + "x" + std::to_string(m) +
                  " seed " + std::to_string(seed));
  lines.push_back("E_total = " + num_str(total));
  lines.push_back("upper bound = " + num_str(bound));
  lines.push_back("residual = " + num_str(residual));
  if (!output.empty()) lines.push_back("state written to " + output);

  emit(j, format, lines);
  return 0;
}

// ------------------------------------------------------------------ sweep --

struct WorstCase {
  double value = 0.0;
  void track(double v) { value = std::max(value, v); }
};

int cmd_sweep(int n, int m, int count, std::uint64_t seed, double tol,
              double ppt_tol, const std::string& format) {
  StageTimer timer("sweep");
  WorstCase e_vs_gram, bound_excess, trace_dev, trace_sq_dev, closed_dev,
      eq21_dev, fact_residual, product_q_sum, perm_dev, lu_dev, chsh_gap;
  int disagreements = 0;

  for (int k = 0; k < count; ++k) {
    const bool product = (k % 2) == 0;
    const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(k));
    const StateMatrix c =
        product ? random_product_state(n, m, s) : random_state(n, m, s);

    const SeparabilityVerdict v = is_separable(c, tol);
    const ReducedCriterion rc = reduced_criterion(c, tol);
    const double et = e_total_value(c);
    const double gram = oracle::e_total_gram(c);
    const auto profile = oracle::schmidt_rank(c, tol);
    const PartialTransposeSpectrum pts = ppt_analyze(c, Side::A, ppt_tol);

    const bool agree = v.separable == rc.separable &&
                       v.separable == (profile.rank == 1) &&
                       v.separable == pts.ppt_positive;
    if (!agree) ++disagreements;

    e_vs_gram.track(std::abs(et - gram));
    bound_excess.track(et - e_upper_bound(n, m));
    const auto [tr, tr2] = trace_checks(pts.sigma, pts.dim);
    trace_dev.track(std::abs(tr - 1.0));
    trace_sq_dev.track(std::abs(tr2 - 1.0));

    if ((n == 2 && m >= 2) || (n == 3 && m == 3)) {
      const std::vector<double> cf =
          n == 2 ? closed_form_spectrum_2xm(c) : cubic_spectrum_3x3(c);
      for (std::size_t i = 0; i < cf.size(); ++i)
        closed_dev.track(std::abs(cf[i] - pts.eigenvalues[i]));
    }
    if (n == 2) {
      const auto [lhs, rhs] = verify_2xm_identity(c);
      eq21_dev.track(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
    if (product) {
      fact_residual.track(factorize(c, tol).residual);
      product_q_sum.track(v.q_sum);
    }

    // permutation invariance: reverse rows and columns
    {
      std::vector<cx> p(c.data.size());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
          p[static_cast<std::size_t>(n - 1 - i) * m + (m - 1 - j)] = c.at(i, j);
      const StateMatrix cp(n, m, std::move(p));
      perm_dev.track(std::abs(q_sum(cp) - v.q_sum));
    }

    if (k < 8) {
      // local-unitary invariance via seeded unitaries from maxent rows
      const StateMatrix un =
          generate_maxent(n, n, mix_seed(s, 1));  // rows orthonormal / sqrt(n)
      const StateMatrix vm = generate_maxent(m, m, mix_seed(s, 2));
      std::vector<cx> rotated(c.data.size(), cx{0, 0});
      // (sqrt(n) U) C (sqrt(m) V)^H
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
          cx acc{0, 0};
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < m; ++q)
              acc += std::sqrt(static_cast<double>(n)) * un.at(i, p) *
                     c.at(p, q) * std::conj(vm.at(j, q)) *
                     std::sqrt(static_cast<double>(m));
          rotated[static_cast<std::size_t>(i) * m + j] = acc;
        }
      lu_dev.track(std::abs(e_total_value(StateMatrix(n, m, std::move(rotated))) - et));
    }

    if (n == 2 && m == 2 && k < 10) {
      const ChshResult r = chsh_optimize(c, 20, mix_seed(s, 3));
      chsh_gap.track(std::abs(r.gap));
    }
  }

  const bool pass = disagreements == 0 && e_vs_gram.value <= 1e-10 &&
                    bound_excess.value <= 1e-9 && trace_dev.value <= 1e-10 &&
                    trace_sq_dev.value <= 1e-10 && closed_dev.value <= 1e-8 &&
                    eq21_dev.value <= 1e-10 && fact_residual.value <= 1e-8 &&
                    product_q_sum.value <= tol && perm_dev.value <= 1e-12 &&
                    lu_dev.value <= 1e-10 && chsh_gap.value <= 1e-5;

  json j;
  j["n"] = n;
  j["m"] = m;
  j["count"] = count;
  j["seed"] = seed;
  j["checks"] = {{"fourway_disagreements", disagreements},
                 {"max_e_total_vs_gram", e_vs_gram.value},
                 {"max_bound_excess", bound_excess.value},
                 {"max_trace_dev", trace_dev.value},
                 {"max_trace_sq_dev", trace_sq_dev.value},
                 {"max_closed_form_dev", closed_dev.value},
                 {"max_identity_2xm_rel_dev", eq21_dev.value},
                 {"max_factorization_residual", fact_residual.value},
                 {"max_product_q_sum", product_q_sum.value},
                 {"max_permutation_dev", perm_dev.value},
                 {"max_local_unitary_dev", lu_dev.value},
                 {"max_chsh_gap", chsh_gap.value}};
  j["pass"] = pass;

  std::vector<std::string> lines;
  lines.push_back("sweep " + std::to_string(n) + "x" + std::to_string(m) +
                  ", " + std::to_string(count) + " states, seed " +
                  std::to_string(seed));
  for (auto& [key, val] : j["checks"].items())
    lines.push_back("  " + key + " = " +
                    (val.is_number_integer()
                         ? std::to_string(val.get<int>())
                         : num_str(val.get<double>())));
  lines.push_back(std::string("pass: ") + (pass ? "true" : "false"));

  emit(j, format, lines);
  return pass ? 0 : 1;
}

// ----------------------------------------------------------------- verify --

int cmd_verify(const std::string& corpus, std::uint64_t seed,
               const std::string& format) {
  StageTimer timer("verify");
  json checks = json::array();
  bool all_pass = true;
  auto record = [&](const std::string& name, bool pass, double value) {
    checks.push_back({{"name", name}, {"pass", pass}, {"value", value}});
    all_pass = all_pass && pass;
  };

  const std::string dir = corpus.empty() ? "data" : corpus;
  auto load = [&](const char* f) { return load_state(dir + "/" + f, false); };

  {
    const StateMatrix bell = load("bell.json");
    record("bell_entangled", !is_separable(bell).separable,
           is_separable(bell).q_sum);
    record("bell_e_total", std::abs(e_total_value(bell) - 0.25) <= 1e-12,
           e_total_value(bell));
    const auto pts = ppt_analyze(bell);
    const std::vector<double> want{0.5, 0.5, 0.5, -0.5};
    double dev = 0.0;
    for (int i = 0; i < 4; ++i)
      dev = std::max(dev, std::abs(pts.eigenvalues[i] - want[i]));
    record("bell_sigma_spectrum", dev <= 1e-10, dev);
    record("bell_chsh_closed",
           std::abs(chsh_max_closed(bell) - 2.0 * std::sqrt(2.0)) <= 1e-12,
           chsh_max_closed(bell));
  }
  {
    const StateMatrix p2 = load("product_2x2.json");
    record("product_2x2_separable", is_separable(p2).separable,
           is_separable(p2).q_sum);
    record("product_2x2_factorization",
           factorize(p2).residual <= 1e-8, factorize(p2).residual);
    record("product_2x2_ppt", ppt_analyze(p2).ppt_positive,
           ppt_analyze(p2).min_eigenvalue);
  }
  {
    const StateMatrix p3 = load("product_3x3.json");
    record("product_3x3_separable", is_separable(p3).separable,
           is_separable(p3).q_sum);
    record("product_3x3_rank1", oracle::schmidt_rank(p3).rank == 1,
           oracle::schmidt_rank(p3).rank);
    const auto spec = ppt_analyze(p3).eigenvalues;
    double dev = std::abs(spec[0] - 1.0);
    for (std::size_t i = 1; i < spec.size(); ++i)
      dev = std::max(dev, std::abs(spec[i]));
    record("product_3x3_spectrum_rank_one", dev <= 1e-8, dev);
  }
  {
    const StateMatrix mx = load("maxent_3x3.json");
    record("maxent_3x3_e_total",
           std::abs(e_total_value(mx) - 1.0 / 3.0) <= 1e-10,
           e_total_value(mx));
    record("maxent_3x3_residual", maxent_check(mx).second <= 1e-10,
           maxent_check(mx).second);
  }
  {
    const StateMatrix zc = load("zero_column_3x3.json");
    const ReducedMatrix r = reduce(zc);
    record("zero_column_reduce",
           r.kept_cols == std::vector<int>{0, 2} && r.matrix.cols == 2 &&
               r.matrix.rows == 3,
           r.matrix.cols);
    record("zero_column_entangled", !is_separable(zc).separable,
           is_separable(zc).q_sum);
    record("zero_column_agreement",
           is_separable(zc).separable == reduced_criterion(zc).separable &&
               is_separable(zc).separable ==
                   (oracle::schmidt_rank(zc).rank == 1) &&
               is_separable(zc).separable == ppt_analyze(zc).ppt_positive,
           0.0);
  }

  // seeded cross-check sweep: four-way agreement + closed forms + traces
  int disagreements = 0;
  double closed_dev = 0.0, trace_dev = 0.0;
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m)
      for (int k = 0; k < 10; ++k) {
        const std::uint64_t s =
            mix_seed(seed, static_cast<std::uint64_t>(((n * 8 + m) * 64 + k)));
        const StateMatrix c = (k % 2) ? random_state(n, m, s)
                                      : random_product_state(n, m, s);
        const bool sep = is_separable(c).separable;
        const auto pts = ppt_analyze(c);
        if (sep != reduced_criterion(c).separable ||
            sep != (oracle::schmidt_rank(c).rank == 1) ||
            sep != pts.ppt_positive)
          ++disagreements;
        const auto [tr, tr2] = trace_checks(pts.sigma, pts.dim);
        trace_dev = std::max({trace_dev, std::abs(tr - 1.0), std::abs(tr2 - 1.0)});
        if (n == 2 || (n == 3 && m == 3)) {
          const auto cf = n == 2 ? closed_form_spectrum_2xm(c)
                                 : cubic_spectrum_3x3(c);
          for (std::size_t i = 0; i < cf.size(); ++i)
            closed_dev = std::max(closed_dev,
                                  std::abs(cf[i] - pts.eigenvalues[i]));
        }
      }
  record("sweep_fourway_agreement", disagreements == 0, disagreements);
  record("sweep_closed_form_dev", closed_dev <= 1e-8, closed_dev);
  record("sweep_trace_dev", trace_dev <= 1e-10, trace_dev);

  json j;
  j["corpus"] = dir;
  j["seed"] = seed;
  j["checks"] = checks;
  j["pass"] = all_pass;

  std::vector<std::string> lines;
  for (const auto& chk : checks)
    lines.push_back(std::string(chk["pass"].get<bool>() ? "ok   " : "FAIL ") +
                    chk["name"].get<std::string>() + " (" +
                    (chk["value"].is_number_integer()
                         ? std::to_string(chk["value"].get<long>())
                         : num_str(chk["value"].get<double>())) +
                    ")");
  lines.push_back(std::string("verify: ") + (all_pass ? "pass" : "FAIL"));

  emit(j, format, lines);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pure bipartite separability, entanglement parameters, PPT and CHSH"};
  app.require_subcommand(1);

  std::string input, format = "text", side = "A", output, corpus = "data",
              selector_spec;
  double tol = kZeroTol, ppt_tol = kPptTol;
  bool all_params = false, closed_form = false, do_normalize = false,
       with_ppt = false, with_chsh = false;
  int top = 8, budget = 20, passes = 500, n = 2, m = 2, count = 100;
  std::uint64_t seed = 1;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "separability and entanglement report");
  analyze->add_option("--input", input, "state file")->required();
  analyze->add_option("--tol", tol, "zero / separability tolerance");
  analyze->add_option("--ppt-tol", ppt_tol, "PPT verdict tolerance");
  analyze->add_flag("--all-params", all_params, "print every E parameter");
  analyze->add_option("--top", top, "parameters shown without --all-params");
  analyze->add_flag("--normalize", do_normalize, "normalize after parsing");
  analyze->add_flag("--ppt", with_ppt, "include the partial-transpose stage");
  analyze->add_flag("--chsh", with_chsh, "include the CHSH stage (2x2 only)");
  analyze->add_option("--budget", budget, "CHSH restarts");
  analyze->add_option("--seed", seed, "CHSH seed");
  add_format(analyze);

  CLI::App* ppt = app.add_subcommand("ppt", "partial transpose spectrum and verdict");
  ppt->add_option("--input", input, "state file")->required();
  ppt->add_option("--side", side, "A or B")->check(CLI::IsMember({"A", "B"}));
  ppt->add_option("--ppt-tol", ppt_tol, "PPT verdict tolerance");
  ppt->add_flag("--closed-form", closed_form, "compare against the closed-form spectrum");
  ppt->add_flag("--normalize", do_normalize, "normalize after parsing");
  add_format(ppt);

  CLI::App* chsh = app.add_subcommand("chsh", "CHSH optimization on a 2x2 state or submatrix");
  chsh->add_option("--input", input, "state file")->required();
  chsh->add_option("--selector", selector_spec, "s,t,u,v (1-based) submatrix");
  chsh->add_option("--budget", budget, "restarts");
  chsh->add_option("--passes", passes, "refinement passes per restart");
  chsh->add_option("--seed", seed, "seed");
  chsh->add_flag("--normalize", do_normalize, "normalize after parsing");
  add_format(chsh);

  CLI::App* maxent = app.add_subcommand("maxent", "generate a maximally-entangled state");
  maxent->add_option("--n", n, "rows")->required();
  maxent->add_option("--m", m, "cols")->required();
  maxent->add_option("--seed", seed, "seed");
  maxent->add_option("--output", output, "write the state to this file");
  add_format(maxent);

  CLI::App* sweep = app.add_subcommand("sweep", "randomized property sweep");
  sweep->add_option("--n", n, "rows")->required();
  sweep->add_option("--m", m, "cols")->required();
  sweep->add_option("--count", count, "number of states");
  sweep->add_option("--seed", seed, "seed");
  sweep->add_option("--tol", tol, "zero / separability tolerance");
  sweep->add_option("--ppt-tol", ppt_tol, "PPT verdict tolerance");
  add_format(sweep);

  CLI::App* verify = app.add_subcommand("verify", "golden corpus and cross-check gate");
  verify->add_option("--corpus", corpus, "corpus directory");
  verify->add_option("--seed", seed, "seed for the random cross-checks");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed())
      return cmd_analyze(input, tol, ppt_tol, format, all_params, top,
                         do_normalize, with_ppt, with_chsh, budget, seed);
    if (ppt->parsed())
      return cmd_ppt(input, side, ppt_tol, closed_form, format, do_normalize);
    if (chsh->parsed())
      return cmd_chsh(input, selector_spec, budget, passes, seed, format,
                      do_normalize);
    if (maxent->parsed()) return cmd_maxent(n, m, seed, output, format);
    if (sweep->parsed())
      return cmd_sweep(n, m, count, seed, tol, ppt_tol, format);
    if (verify->parsed()) return cmd_verify(corpus, seed, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
