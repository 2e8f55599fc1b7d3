// Copyright 2026 The Qsep Authors
// SPDX-License-Identifier: Apache-2.0

#include "qsep/state.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>

#include "qsep/rng.hpp"
#include <json.hpp>

namespace qsep {

namespace {

double recompute_norm2(const std::vector<cx>& data) {
  double acc = 0.0;
  for (const cx& z : data) acc += std::norm(z);
  return acc;
}

void check_finite(const std::vector<cx>& data, const char* what) {
  for (const cx& z : data) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw error(std::string(what) + ": non-finite entry");
  }
}

void append_number(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

// Accepts a, bi, a+bi, a-bi and the shorthand i, +i, -i, a+i, a-i.
cx parse_complex_token(const std::string& tok) {
  const char* p = tok.c_str();
  const char* const end_of_tok = p + tok.size();
  char* end = nullptr;

  auto bare_i = [](const char* q, const char* stop) {
    // optional sign followed by a lone 'i'
    double sign = 1.0;
    if (*q == '+' || *q == '-') {
      if (*q == '-') sign = -1.0;
      ++q;
    }
    if (q + 1 == stop && *q == 'i') return sign;
    return 0.0;  // sentinel: not a bare i
  };

  double first = std::strtod(p, &end);
  if (end == p) {
    double s = bare_i(p, end_of_tok);
    if (s != 0.0) return {0.0, s};
    throw error("plain parse: bad entry '" + tok + "'");
  }
  if (end == end_of_tok) return {first, 0.0};
  if (*end == 'i' && end + 1 == end_of_tok) return {0.0, first};
  if (*end == '+' || *end == '-') {
    const char* q = end;
    char* end2 = nullptr;
    double second = std::strtod(q, &end2);
    if (end2 != q && *end2 == 'i' && end2 + 1 == end_of_tok)
      return {first, second};
    double s = bare_i(q, end_of_tok);
    if (s != 0.0) return {first, s};
  }
  throw error("plain parse: bad entry '" + tok + "'");
}

StateMatrix parse_plain(const std::string& text) {
  std::vector<std::vector<cx>> rows;
  std::vector<cx> current;
  std::string tok;
  auto flush_tok = [&] {
    if (!tok.empty()) {
      current.push_back(parse_complex_token(tok));
      tok.clear();
    }
  };
  auto flush_row = [&] {
    flush_tok();
    if (!current.empty()) {
      rows.push_back(std::move(current));
      current.clear();
    }
  };
  for (char ch : text) {
    if (ch == '/' || ch == '\n') {
      flush_row();
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      flush_tok();
    } else {
      tok += ch;
    }
  }
  flush_row();

  if (rows.empty()) throw error("plain parse: no entries");
  const std::size_t m = rows[0].size();
  std::vector<cx> data;
  for (const auto& r : rows) {
    if (r.size() != m)
      throw error("plain parse: ragged rows (" + std::to_string(r.size()) +
                  " vs " + std::to_string(m) + " entries)");
    data.insert(data.end(), r.begin(), r.end());
  }
  return StateMatrix(static_cast<int>(rows.size()), static_cast<int>(m),
                     std::move(data));
}

StateMatrix parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("json parse: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data"))
    throw error("json parse: expected object with rows, cols, data");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
    throw error("json parse: rows/cols must be integers");
  const int n = j["rows"].get<int>();
  const int m = j["cols"].get<int>();
  if (n < 1 || m < 1) throw error("json parse: rows and cols must be >= 1");
  const auto& d = j["data"];
  if (!d.is_array() ||
      d.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(m))
    throw error("json parse: data length " + std::to_string(d.size()) +
                " does not match rows*cols = " + std::to_string(n * m));
  std::vector<cx> data;
  data.reserve(d.size());
  for (const auto& e : d) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number())
      throw error("json parse: each data entry must be [re, im]");
    data.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return StateMatrix(n, m, std::move(data));
}

}  // namespace

StateMatrix::StateMatrix(int n, int m, std::vector<cx> entries) {
  if (n < 1 || m < 1) throw error("state matrix: dimensions must be >= 1");
  if (entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(m))
    throw error("state matrix: data length does not match dimensions");
  check_finite(entries, "state matrix");
  rows = n;
  cols = m;
  data = std::move(entries);
  norm2 = recompute_norm2(data);
}

StateMatrix StateMatrix::transposed() const {
  std::vector<cx> t(data.size());
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      t[static_cast<std::size_t>(j) * rows + i] = at(i, j);
  return StateMatrix(cols, rows, std::move(t));
}

StateMatrix parse_state(const std::string& text, StateFormat format) {
  return format == StateFormat::json ? parse_json(text) : parse_plain(text);
}

std::string serialize_state(const StateMatrix& c) {
  std::string out = "{\"rows\":" + std::to_string(c.rows) +
                    ",\"cols\":" + std::to_string(c.cols) + ",\"data\":[";
  for (std::size_t k = 0; k < c.data.size(); ++k) {
    if (k) out += ',';
    out += '[';
    append_number(out, c.data[k].real());
    out += ',';
    append_number(out, c.data[k].imag());
    out += ']';
  }
  out += "]}";
  return out;
}

StateMatrix normalize(const StateMatrix& c) {
  if (!(c.norm2 > 1e-300))
    throw error("normalize: all-zero state has no normalization");
  const double scale = 1.0 / std::sqrt(c.norm2);
  std::vector<cx> data(c.data);
  for (cx& z : data) z *= scale;
  return StateMatrix(c.rows, c.cols, std::move(data));
}

ReducedMatrix reduce(const StateMatrix& c, double tol) {
  std::vector<int> kept_rows, kept_cols;
  for (int i = 0; i < c.rows; ++i)
    for (int j = 0; j < c.cols; ++j)
      if (std::abs(c.at(i, j)) > tol) {
        kept_rows.push_back(i);
        break;
      }
  for (int j = 0; j < c.cols; ++j)
    for (int i = 0; i < c.rows; ++i)
      if (std::abs(c.at(i, j)) > tol) {
        kept_cols.push_back(j);
        break;
      }
  if (kept_rows.empty() || kept_cols.empty())
    throw error("reduce: no entry above tolerance; reduced matrix undefined");
  std::vector<cx> data;
  data.reserve(kept_rows.size() * kept_cols.size());
  for (int i : kept_rows)
    for (int j : kept_cols) data.push_back(c.at(i, j));
  ReducedMatrix r;
  r.matrix = StateMatrix(static_cast<int>(kept_rows.size()),
                         static_cast<int>(kept_cols.size()), std::move(data));
  r.kept_rows = std::move(kept_rows);
  r.kept_cols = std::move(kept_cols);
  return r;
}

int zero_flag(const StateMatrix& m, double tol) {
  for (const cx& z : m.data)
    if (!(std::abs(z) > tol)) return 1;
  return 0;
}

StateMatrix random_state(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 1) throw error("random_state: dimensions must be >= 1");
  GaussianRng rng(seed);
  std::vector<cx> data(static_cast<std::size_t>(n) * m);
  for (cx& z : data) z = rng.complex_normal();
  return normalize(StateMatrix(n, m, std::move(data)));
}

StateMatrix random_product_state(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 1)
    throw error("random_product_state: dimensions must be >= 1");
  GaussianRng rng(seed);
  std::vector<cx> a(n), b(m);
  for (cx& z : a) z = rng.complex_normal();
  for (cx& z : b) z = rng.complex_normal();
  std::vector<cx> data(static_cast<std::size_t>(n) * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      data[static_cast<std::size_t>(i) * m + j] = a[i] * b[j];
  return normalize(StateMatrix(n, m, std::move(data)));
}

}  // namespace qsep
