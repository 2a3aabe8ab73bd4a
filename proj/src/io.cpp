// Copyright 2026 The Choilab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "choilab/io.hpp"

#include <fstream>

namespace choilab::io {

namespace {

json complex_to_json(const complexd& z) { return json::array({z.real(), z.imag()}); }

complexd complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw parse_error("expected a [re, im] pair");
  return complexd(j[0].get<double>(), j[1].get<double>());
}

int positive_int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw parse_error(std::string("missing integer field \"") + key + "\"");
  const int v = j[key].get<int>();
  if (v < 1) throw dim_error(std::string("field \"") + key + "\" must be >= 1");
  return v;
}

std::string string_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw parse_error(std::string("missing string field \"") + key + "\"");
  return j[key].get<std::string>();
}

void require_schema(const json& j, std::string_view schema) {
  if (!j.is_object()) throw parse_error("document is not a JSON object");
  if (string_field(j, "schema") != schema)
    throw parse_error(std::string("schema mismatch, expected ") + std::string(schema));
}

Orientation orientation_from_string(const std::string& s) {
  if (s == "forward") return Orientation::Forward;
  if (s == "reverse") return Orientation::Reverse;
  throw parse_error("orientation must be \"forward\" or \"reverse\"");
}

const char* orientation_to_string(Orientation o) {
  return o == Orientation::Forward ? "forward" : "reverse";
}

Variant variant_from_string(const std::string& s) {
  for (Variant v : {Variant::J, Variant::C, Variant::CJstar, Variant::JstarC})
    if (s == variant_name(v)) return v;
  throw parse_error("unknown variant \"" + s + "\"");
}

}  // namespace

json matrix_to_json(const CMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw parse_error("matrix must be a non-empty array");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty())
    throw parse_error("matrix rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  CMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw parse_error("matrix rows must all have equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

json map_to_json(const QuantumMap& phi, bool prefer_kraus) {
  json j;
  j["schema"] = kMapSchema;
  j["d_a"] = phi.d_a;
  j["d_b"] = phi.d_b;
  if (prefer_kraus && phi.kraus) {
    j["repr"] = "kraus";
    json ops = json::array();
    for (const CMat& k : *phi.kraus) ops.push_back(matrix_to_json(k));
    j["data"] = std::move(ops);
  } else {
    j["repr"] = "transfer";
    j["data"] = matrix_to_json(phi.transfer);
  }
  j["orientation_a"] = orientation_to_string(phi.orientation_a);
  j["orientation_b"] = orientation_to_string(phi.orientation_b);
  return j;
}

QuantumMap map_from_json(const json& j) {
  require_schema(j, kMapSchema);
  const int d_a = positive_int_field(j, "d_a");
  const int d_b = positive_int_field(j, "d_b");
  const std::string repr = string_field(j, "repr");
  if (!j.contains("data")) throw parse_error("missing field \"data\"");

  QuantumMap phi;
  if (repr == "kraus") {
    if (!j["data"].is_array() || j["data"].empty())
      throw parse_error("kraus data must be a non-empty array of matrices");
    std::vector<CMat> ops;
    ops.reserve(j["data"].size());
    for (const json& jk : j["data"]) {
      CMat k = matrix_from_json(jk);
      if (k.rows() != d_b || k.cols() != d_a)
        throw dim_error("kraus operator shape does not match d_b x d_a");
      ops.push_back(std::move(k));
    }
    phi = map_from_kraus(std::move(ops));
  } else if (repr == "transfer") {
    CMat t = matrix_from_json(j["data"]);
    if (t.rows() != Eigen::Index(d_b) * d_b || t.cols() != Eigen::Index(d_a) * d_a)
      throw dim_error("transfer shape does not match d_b^2 x d_a^2");
    phi = map_from_transfer(std::move(t), d_a, d_b);
  } else {
    throw parse_error("repr must be \"kraus\" or \"transfer\"");
  }
  if (!all_finite(phi.transfer)) throw parse_error("non-finite matrix entries");
  phi.orientation_a = orientation_from_string(string_field(j, "orientation_a"));
  phi.orientation_b = orientation_from_string(string_field(j, "orientation_b"));
  return phi;
}

json state_to_json(const DualityState& rho) {
  json j;
  j["schema"] = kStateSchema;
  j["d_a"] = rho.idx.d_a;
  j["d_b"] = rho.idx.d_b;
  j["variant"] = variant_name(rho.variant);
  j["dual_a"] = rho.dual_a;
  j["dual_b"] = rho.dual_b;
  j["matrix"] = matrix_to_json(rho.matrix);
  return j;
}

DualityState state_from_json(const json& j) {
  require_schema(j, kStateSchema);
  const BipartiteIndex idx(positive_int_field(j, "d_a"), positive_int_field(j, "d_b"));
  const Variant v = variant_from_string(string_field(j, "variant"));
  if (!j.contains("matrix")) throw parse_error("missing field \"matrix\"");
  CMat m = matrix_from_json(j["matrix"]);
  if (m.rows() != m.cols() || m.rows() != idx.side())
    throw dim_error("state matrix side does not match d_a * d_b");
  if (!all_finite(m)) throw parse_error("non-finite matrix entries");
  if (!j.contains("dual_a") || !j["dual_a"].is_boolean() || !j.contains("dual_b") ||
      !j["dual_b"].is_boolean())
    throw parse_error("missing boolean fields \"dual_a\"/\"dual_b\"");
  if (j["dual_a"].get<bool>() != canonical_dual_a(v) || j["dual_b"].get<bool>() != false)
    throw variant_error("dual flags inconsistent with variant tag");
  return make_state(std::move(m), idx, v);
}

FileKind peek_kind(const json& j) {
  if (!j.is_object() || !j.contains("schema") || !j["schema"].is_string())
    throw parse_error("document carries no schema string");
  const std::string s = j["schema"].get<std::string>();
  if (s == kMapSchema) return FileKind::Map;
  if (s == kStateSchema) return FileKind::State;
  throw parse_error("unknown schema \"" + s + "\"");
}

json predicate_report_to_json(const PredicateReport& report, std::string_view predicate) {
  json j;
  j["schema"] = kReportSchema;
  j["kind"] = "check";
  j["predicate"] = std::string(predicate);
  j["verdict"] = verdict_name(report.verdict);
  j["witness_value"] = report.witness_value;
  j["tol"] = report.tol;
  j["restarts_used"] = report.restarts_used;
  const auto vec_json = [](const CVec& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_to_json(v(i)));
    return a;
  };
  if (report.witness_x) j["witness_x"] = vec_json(*report.witness_x);
  if (report.witness_y) j["witness_y"] = vec_json(*report.witness_y);
  return j;
}

json verify_report_to_json(const std::vector<SuiteResult>& results,
                           const TheoremSuite& config) {
  json j;
  j["schema"] = kReportSchema;
  j["kind"] = "verify";
  j["seed"] = config.seed;
  j["trials"] = config.trials;
  j["tol"] = config.tol;
  json dims = json::array();
  for (const auto& [a, b] : config.dims) dims.push_back(json::array({a, b}));
  j["dims"] = std::move(dims);

  int failed_total = 0;
  json suites = json::array();
  for (const SuiteResult& r : results) {
    json s;
    s["id"] = suite_name(r.id);
    s["passed"] = r.passed;
    s["failed"] = r.failed;
    s["wallclock_s"] = r.wallclock_s;
    json ces = json::array();
    for (const Counterexample& ce : r.counterexamples)
      ces.push_back(json{{"seed", ce.seed}, {"class", ce.check}, {"witness", ce.witness}});
    s["counterexamples"] = std::move(ces);
    suites.push_back(std::move(s));
    failed_total += r.failed;
  }
  j["suites"] = std::move(suites);
  j["failed_total"] = failed_total;
  return j;
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("JSON parse failure: ") + e.what());
  }
  return j;
}

void save_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot open file for writing: " + path.string());
  out << j.dump(2) << "\n";
}

QuantumMap load_map(const std::filesystem::path& path) {
  return map_from_json(load_json_file(path));
}

DualityState load_state(const std::filesystem::path& path) {
  return state_from_json(load_json_file(path));
}

}  // namespace choilab::io
