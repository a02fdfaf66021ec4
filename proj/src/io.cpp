// Copyright 2026 The ftcons Authors
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

#include "ftcons/io.hpp"

#include <fstream>
#include <sstream>

#include "ftcons/errors.hpp"

namespace ftcons::io {
namespace {

constexpr const char* kGraphSchema =
    R"({"n": <int>, "arcs": [[from, to], ...], "undirected": <bool, optional>})";
constexpr const char* kSequenceSchema =
    R"({"n": <int>, "matrices": [[["p/q", ...], ...], ...]})";
constexpr const char* kVectorSchema = R"({"x": ["p/q", ...]})";
constexpr const char* kWeightsSchema = R"({"weights": ["p/q", ...]})";

[[noreturn]] void fail(const std::string& where, const std::string& message,
                       const char* schema = nullptr) {
  std::string text = where + ": " + message;
  if (schema) text += " (expected schema: " + std::string(schema) + ")";
  throw FormatError(text);
}

const Json& field(const Json& j, const char* key, const std::string& source,
                  const char* schema) {
  if (!j.is_object()) fail(source, "top-level value is not an object", schema);
  if (!j.contains(key)) {
    fail(source, std::string("missing field \"") + key + "\"", schema);
  }
  return j.at(key);
}

int int_from_json(const Json& j, const std::string& where, const char* schema) {
  if (!j.is_number_integer()) fail(where, "expected an integer", schema);
  return j.get<int>();
}

Json optional_int(const std::optional<Eigen::Index>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json nodes_to_json(const std::vector<Node>& nodes) { return Json(nodes); }

template <typename Scalar>
Json state_to_json(const Vector<Scalar>& x) {
  Json row = Json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      row.push_back(rational_to_json(x(i)));
    } else {
      row.push_back(x(i));
    }
  }
  return row;
}

template <typename Scalar>
Json trajectory_impl(const Trajectory<Scalar>& t, const char* mode) {
  Json j;
  j["mode"] = mode;
  j["consensus_at"] = t.consensus_at ? Json(*t.consensus_at) : Json(nullptr);
  Json states = Json::array();
  for (const auto& x : t.states) states.push_back(state_to_json(x));
  j["states"] = std::move(states);
  return j;
}

RationalVector rational_list(const Json& j, const std::string& where,
                             const char* schema) {
  if (!j.is_array()) fail(where, "expected an array of rationals", schema);
  RationalVector x(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    x(static_cast<Eigen::Index>(i)) =
        rational_from_json(j[i], where + "[" + std::to_string(i) + "]");
  }
  return x;
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) {
    fail(where, "expected a rational string \"p\" or \"p/q\"");
  }
  try {
    return parse_rational(j.get<std::string>());
  } catch (const FormatError& e) {
    fail(where, e.what());
  }
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      row.push_back(rational_to_json(m(i, k)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    fail(where, "expected a nonempty array of rows", kSequenceSchema);
  }
  const auto n = static_cast<Eigen::Index>(j.size());
  RationalMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      fail(row_where, "expected a row of " + std::to_string(n) + " entries",
           kSequenceSchema);
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      m(i, k) = rational_from_json(row[static_cast<std::size_t>(k)],
                                   row_where + "[" + std::to_string(k) + "]");
    }
  }
  return m;
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  Json arcs = Json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.from, a.to});
  j["arcs"] = std::move(arcs);
  return j;
}

Graph graph_from_json(const Json& j, const std::string& source) {
  const int n = int_from_json(field(j, "n", source, kGraphSchema), source + ": n",
                              kGraphSchema);
  if (n < 1) fail(source + ": n", "node count must be at least 1", kGraphSchema);
  bool undirected = false;
  if (j.contains("undirected")) {
    if (!j["undirected"].is_boolean()) {
      fail(source + ": undirected", "expected a boolean", kGraphSchema);
    }
    undirected = j["undirected"].get<bool>();
  }
  const Json& arcs = field(j, "arcs", source, kGraphSchema);
  if (!arcs.is_array()) fail(source + ": arcs", "expected an array", kGraphSchema);
  Graph g(n);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const std::string where = source + ": arcs[" + std::to_string(k) + "]";
    const Json& a = arcs[k];
    if (!a.is_array() || a.size() != 2) {
      fail(where, "expected a pair [from, to]", kGraphSchema);
    }
    const int from = int_from_json(a[0], where + "[0]", kGraphSchema);
    const int to = int_from_json(a[1], where + "[1]", kGraphSchema);
    if (from < 1 || from > n || to < 1 || to > n) {
      fail(where, "node id outside 1.." + std::to_string(n), kGraphSchema);
    }
    if (from == to) fail(where, "self-loops are not allowed", kGraphSchema);
    g.add_arc(from, to);
    if (undirected) g.add_arc(to, from);
  }
  return g;
}

Json sequence_to_json(const MatrixSequence& seq) {
  Json j;
  j["n"] = seq.order;
  Json matrices = Json::array();
  for (const auto& m : seq.matrices) matrices.push_back(matrix_to_json(m));
  j["matrices"] = std::move(matrices);
  return j;
}

MatrixSequence sequence_from_json(const Json& j, const std::string& source) {
  const int n = int_from_json(field(j, "n", source, kSequenceSchema),
                              source + ": n", kSequenceSchema);
  if (n < 1) fail(source + ": n", "order must be at least 1", kSequenceSchema);
  const Json& matrices = field(j, "matrices", source, kSequenceSchema);
  if (!matrices.is_array()) {
    fail(source + ": matrices", "expected an array", kSequenceSchema);
  }
  MatrixSequence seq{n, {}};
  for (std::size_t t = 0; t < matrices.size(); ++t) {
    const std::string where = source + ": matrices[" + std::to_string(t) + "]";
    RationalMatrix m = matrix_from_json(matrices[t], where);
    if (m.rows() != n) {
      fail(where, "matrix order " + std::to_string(m.rows()) +
                      " differs from n = " + std::to_string(n),
           kSequenceSchema);
    }
    seq.matrices.push_back(std::move(m));
  }
  return seq;
}

Json vector_to_json(const RationalVector& x) {
  Json j;
  j["x"] = state_to_json(x);
  return j;
}

RationalVector vector_from_json(const Json& j, const std::string& source) {
  return rational_list(field(j, "x", source, kVectorSchema), source + ": x",
                       kVectorSchema);
}

Json weights_to_json(const WeightVector& w) {
  Json j;
  j["weights"] = state_to_json(w.values());
  return j;
}

WeightVector weights_from_json(const Json& j, const std::string& source) {
  RationalVector w = rational_list(field(j, "weights", source, kWeightsSchema),
                                   source + ": weights", kWeightsSchema);
  try {
    return WeightVector(std::move(w));
  } catch (const PreconditionError& e) {
    fail(source + ": weights", e.what(), kWeightsSchema);
  }
}

Json verdict_to_json(const FeasibilityVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  const auto& r = v.reasons;
  Json reasons;
  reasons["strongly_connected"] = r.strongly_connected;
  reasons["even_simple_cycle"] =
      r.even_simple_cycle ? nodes_to_json(*r.even_simple_cycle) : Json(nullptr);
  reasons["bidirectional_spanning_tree"] = r.bidirectional_spanning_tree;
  reasons["is_pure_simple_cycle"] = r.is_pure_simple_cycle;
  j["reasons"] = std::move(reasons);
  return j;
}

Json verification_to_json(const VerificationReport& r) {
  Json j;
  j["goal"] = to_string(r.goal);
  j["length"] = r.length;
  j["passed"] = r.passed();
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json item;
    item["check"] = f.check;
    item["matrix"] = f.matrix ? Json(*f.matrix) : Json(nullptr);
    item["row"] = optional_int(f.row);
    item["column"] = optional_int(f.column);
    item["detail"] = f.detail;
    failures.push_back(std::move(item));
  }
  j["failures"] = std::move(failures);
  j["product"] = r.product ? matrix_to_json(*r.product) : Json(nullptr);
  return j;
}

Json certificate_to_json(const SignWalk& walk) {
  Json j;
  j["xstar"] = rational_to_json(walk.xstar);
  j["walk"] = nodes_to_json(walk.visited);
  j["cycle"] = nodes_to_json(walk.cycle);
  return j;
}

Json evidence_to_json(const CycleEvidenceReport& r) {
  Json j;
  j["cycle_length"] = r.cycle_length;
  j["trials"] = r.trials;
  j["max_length"] = r.max_length;
  j["seed"] = r.seed;
  j["rank_one_products"] = r.rank_one_products;
  j["lemma_checks"] = r.lemma_checks;
  j["lemma_violations"] = r.lemma_violations;
  j["first_rank_one_trial"] =
      r.first_rank_one_trial ? Json(*r.first_rank_one_trial) : Json(nullptr);
  j["first_lemma_violation_trial"] =
      r.first_lemma_violation_trial ? Json(*r.first_lemma_violation_trial)
                                    : Json(nullptr);
  j["note"] = r.note;
  return j;
}

Json trajectory_to_json(const Trajectory<Rational>& t) {
  return trajectory_impl(t, "exact");
}

Json trajectory_to_json(const Trajectory<double>& t) {
  return trajectory_impl(t, "approx");
}

Json demo_to_json(const DemoReport& r) {
  Json j;
  j["passed"] = r.passed;
  j["verification"] = verification_to_json(r.verification);
  j["verdict"] = verdict_to_json(r.verdict);
  j["trajectory"] = trajectory_to_json(r.trajectory);
  j["certificate"] =
      r.certificate ? certificate_to_json(*r.certificate) : Json("degenerate");
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": invalid JSON at byte " +
                      std::to_string(e.byte) + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError(path.string() + ": cannot open for writing");
  out << j.dump(2) << '\n';
  if (!out) throw FormatError(path.string() + ": write failed");
}

}  // namespace ftcons::io
